#include "modrep/eigenspace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace modrep {

namespace {

void require_short_ladders(const LadderData& lad, const Prime& p) {
    for (int k = 0; k < lad.count(); ++k)
        if (lad.sizes[k] >= p.value())
            throw LadderLengthError("ladder " + std::to_string(k + 1) + " of (" + lad.shape.to_string() +
                                    ") has " + std::to_string(lad.sizes[k]) + " >= p = " +
                                    std::to_string(p.value()) + " nodes");
}

// (1/m!) Σ_{σ ∈ Sym{lo..hi}} σ v, enumerating the group breadth-first so that
// each element costs a single generator application.
SeminormalVector average_over_interval(int lo, int hi, const SeminormalVector& v) {
    const int m = hi - lo + 1;
    if (m <= 1) return v;
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), lo);
    std::map<std::vector<int>, SeminormalVector> images;
    images.emplace(id, v);
    std::vector<std::vector<int>> frontier{id};
    SeminormalVector sum = v;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            const SeminormalVector& img = images.at(w);
            for (int j = lo + 1; j <= hi; ++j) {
                // σ_j ∘ w swaps the values j-1 and j in the one-line form.
                std::vector<int> sw = w;
                for (int& x : sw) {
                    if (x == j - 1)
                        x = j;
                    else if (x == j)
                        x = j - 1;
                }
                if (images.count(sw)) continue;
                SeminormalVector moved = sigma_action(j, img);
                sum += moved;
                images.emplace(sw, std::move(moved));
                next.push_back(std::move(sw));
            }
        }
        frontier = std::move(next);
    }
    Rational factorial = 1;
    for (int k = 2; k <= m; ++k) factorial *= k;
    sum *= Rational(1 / factorial);
    return sum;
}

}  // namespace

std::vector<SeminormalVector> phi_chain_basis(const Partition& tau,
                                              const std::vector<StandardTableau>& t_mu_tau,
                                              const Prime& p, WordStrategy strategy) {
    std::vector<SeminormalVector> out;
    out.reserve(t_mu_tau.size());
    const auto start = SeminormalVector::basis(StandardTableau::row_reading(tau));
    for (const auto& s : t_mu_tau) {
        if (s.shape() != tau) throw SizeMismatch("tableau in T_{mu tau} has the wrong shape");
        auto word = d_reduced_word(s, strategy).word;
        SeminormalVector v = start;
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = phi_action(*it, v, p);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SeminormalVector> phi_chain_basis(const Partition& mu, const Partition& tau, const Prime& p,
                                              WordStrategy strategy, const EnumerationLimits& limits) {
    if (mu.size() != tau.size()) throw SizeMismatch("|mu| != |tau|");
    auto lad = ladder_decomposition(mu, p);
    require_short_ladders(lad, p);
    auto t_mu_tau = tableau_class_of_shape(lad.ladder_residue_sequence, tau, limits);
    return phi_chain_basis(tau, t_mu_tau, p, strategy);
}

std::vector<SeminormalVector> ladder_average(const LadderData& lad,
                                             const std::vector<SeminormalVector>& basis) {
    std::vector<SeminormalVector> out;
    out.reserve(basis.size());
    for (const auto& v : basis) {
        SeminormalVector w = v;
        for (int k = 1; k <= lad.count(); ++k) {
            auto [lo, hi] = lad.interval(k);
            w = average_over_interval(lo, hi, w);
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<std::size_t> independent_subset(const std::vector<SeminormalVector>& vectors) {
    // Echelon rows keyed by pivot tableau; each row is normalised to pivot 1.
    std::map<StandardTableau, SeminormalVector::Coeffs> echelon;
    std::vector<std::size_t> chosen;
    for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
        SeminormalVector::Coeffs r = vectors[idx].coeffs();
        for (;;) {
            auto pivot = std::find_if(r.begin(), r.end(), [&](const auto& kv) { return echelon.count(kv.first); });
            if (pivot == r.end()) break;
            const Rational factor = pivot->second;
            for (const auto& [t, c] : echelon.at(pivot->first)) {
                auto [it, inserted] = r.try_emplace(t, -factor * c);
                if (!inserted) {
                    it->second -= factor * c;
                    if (it->second == 0) r.erase(it);
                }
            }
        }
        if (r.empty()) continue;
        const StandardTableau lead = r.begin()->first;
        const Rational inv = 1 / r.begin()->second;
        for (auto& [t, c] : r) c *= inv;
        // Keep the echelon fully reduced on the new pivot.
        for (auto& [piv, row] : echelon) {
            auto it = row.find(lead);
            if (it == row.end()) continue;
            const Rational factor = it->second;
            for (const auto& [t, c] : r) {
                auto [jt, inserted] = row.try_emplace(t, -factor * c);
                if (!inserted) {
                    jt->second -= factor * c;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        }
        echelon.emplace(lead, std::move(r));
        chosen.push_back(idx);
    }
    return chosen;
}

std::vector<SeminormalVector> ladder_symmetrize(const Partition& mu,
                                                const std::vector<SeminormalVector>& basis,
                                                const Prime& p) {
    auto lad = ladder_decomposition(mu, p);
    require_short_ladders(lad, p);
    auto averaged = ladder_average(lad, basis);
    std::vector<SeminormalVector> out;
    for (auto idx : independent_subset(averaged)) out.push_back(std::move(averaged[idx]));
    return out;
}

RationalMatrix gram_matrix(const std::vector<SeminormalVector>& basis) {
    const std::size_t m = basis.size();
    RationalMatrix g(m, std::vector<Rational>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            g[a][b] = inner_product(basis[a], basis[b]);
            g[b][a] = g[a][b];
        }
    return g;
}

int rank_mod_p(ModpMatrix m, const Prime& p) {
    const long pp = p.value();
    auto inverse = [&](long a) {
        long r = 1, e = pp - 2;
        a %= pp;
        while (e > 0) {
            if (e & 1) r = r * a % pp;
            a = a * a % pp;
            e >>= 1;
        }
        return r;
    };
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const long inv = inverse(m[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
            const long f = m[r][c] * inv % pp;
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] = static_cast<int>(((m[r][k] - f * m[rank][k]) % pp + pp) % pp);
        }
        ++rank;
    }
    return rank;
}

ModpRank modp_rank(const RationalMatrix& g, const Prime& p) {
    ModpRank out;
    const unsigned long pp = static_cast<unsigned long>(p.value());
    out.reduced.resize(g.size());
    for (std::size_t r = 0; r < g.size(); ++r) {
        out.reduced[r].resize(g[r].size());
        for (std::size_t c = 0; c < g[r].size(); ++c) {
            const Rational& x = g[r][c];
            if (!is_p_integral(x, p))
                throw std::domain_error("Gram entry " + x.get_str() + " is not " + std::to_string(pp) +
                                        "-integral");
            mpz_class num = x.get_num() % static_cast<long>(pp);
            if (num < 0) num += static_cast<long>(pp);
            mpz_class den = x.get_den() % static_cast<long>(pp);
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<long>(pp)).get_mpz_t());
            mpz_class v = (num * inv) % static_cast<long>(pp);
            out.reduced[r][c] = static_cast<int>(v.get_si());
        }
    }
    out.rank = rank_mod_p(out.reduced, p);
    return out;
}

GramReport gram_report(const LadderData& lad, const Partition& tau,
                       const std::vector<StandardTableau>& t_mu_tau, const Prime& p,
                       WordStrategy strategy) {
    require_short_ladders(lad, p);
    GramReport rep;
    rep.mu = lad.shape;
    rep.tau = tau;
    rep.p = p.value();
    auto basis = phi_chain_basis(tau, t_mu_tau, p, strategy);
    rep.basis_size_before_symmetrization = static_cast<int>(basis.size());
    auto averaged = ladder_average(lad, basis);
    std::vector<SeminormalVector> chosen;
    for (auto idx : independent_subset(averaged)) chosen.push_back(std::move(averaged[idx]));
    rep.basis_size = static_cast<int>(chosen.size());
    rep.gram = gram_matrix(chosen);
    auto red = modp_rank(rep.gram, p);
    rep.gram_mod_p = std::move(red.reduced);
    rep.rank = red.rank;
    return rep;
}

GramReport gram_report(const Partition& mu, const Partition& tau, const Prime& p,
                       WordStrategy strategy, const EnumerationLimits& limits) {
    if (mu.size() != tau.size()) throw SizeMismatch("|mu| != |tau|");
    auto lad = ladder_decomposition(mu, p);
    require_short_ladders(lad, p);
    auto t_mu_tau = tableau_class_of_shape(lad.ladder_residue_sequence, tau, limits);
    return gram_report(lad, tau, t_mu_tau, p, strategy);
}

std::vector<SeminormalVector> integral_basis(const Partition& tau) {
    std::map<StandardTableau, SeminormalVector> memo;
    const auto top = StandardTableau::row_reading(tau);
    memo.emplace(top, SeminormalVector::basis(top));
    // x_s = σ_j x_{s'} where j leads a reduced word of d(s) and s' = σ_j s.
    std::function<const SeminormalVector&(const StandardTableau&)> build =
        [&](const StandardTableau& s) -> const SeminormalVector& {
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        const int j = d_reduced_word(s).word.front();
        auto shorter = s.swap(j);
        if (!shorter) throw std::logic_error("reduced word of d(" + s.to_string() + ") leads with a fixed swap");
        SeminormalVector x = sigma_action(j, build(*shorter));
        return memo.emplace(s, std::move(x)).first->second;
    };
    std::vector<SeminormalVector> out;
    for (const auto& s : standard_tableaux(tau)) out.push_back(build(s));
    return out;
}

int class_form_rank(const std::vector<SeminormalVector>& lattice_span, const ResidueSequence& seq,
                    const Prime& p) {
    std::vector<SeminormalVector> projected;
    for (const auto& x : lattice_span) {
        auto y = class_project(seq, x);
        if (!y.is_zero()) projected.push_back(std::move(y));
    }
    return modp_rank(gram_matrix(projected), p).rank;
}

int divided_power_dim(const LadderData& lad, const std::vector<SeminormalVector>& lattice_span,
                      const Prime& p) {
    const int full = class_form_rank(lattice_span, lad.ladder_residue_sequence, p);
    const auto order = static_cast<long>(lad.group_order());
    if (full % order != 0)
        throw std::logic_error("class rank " + std::to_string(full) + " of (" + lad.shape.to_string() +
                               ") is not divisible by the ladder group order " + std::to_string(order));
    return static_cast<int>(full / order);
}

int dim_e_tilde_D(const Partition& mu, const Partition& tau, const Prime& p, WordStrategy strategy,
                  const EnumerationLimits& limits) {
    return gram_report(mu, tau, p, strategy, limits).rank;
}

}  // namespace modrep
