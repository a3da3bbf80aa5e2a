#include "modrep/fock.hpp"

#include <stdexcept>

#include "modrep/ladder.hpp"
#include "modrep/parallel.hpp"

namespace modrep {

FockVector FockVector::basis(const Partition& lambda) {
    FockVector v(lambda.size());
    v.add_term(lambda, 1);
    return v;
}

LaurentPoly FockVector::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add_term(const Partition& lambda, const LaurentPoly& c) {
    if (lambda.size() != n_) throw SizeMismatch("Fock vector term of the wrong size");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    if (o.n_ != n_ && !o.is_zero()) throw SizeMismatch("adding Fock vectors of different degree");
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    if (o.n_ != n_ && !o.is_zero()) throw SizeMismatch("subtracting Fock vectors of different degree");
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

FockVector operator*(const LaurentPoly& c, const FockVector& v) {
    FockVector r(v.n_);
    if (c.is_zero()) return r;
    for (const auto& [lam, d] : v.terms_) r.add_term(lam, c * d);
    return r;
}

bool FockVector::coefficients_bar_symmetric() const {
    for (const auto& [lam, c] : terms_)
        if (!c.is_bar_invariant()) return false;
    return true;
}

namespace {

// Addable minus removable i-nodes of `lam` whose column lies strictly on the
// requested side of `col`. Neighbours of the moving node have residue i±1,
// so the count is the same whether taken before or after the move.
int signed_count(const Partition& lam, int i, const Prime& p, int col, bool left) {
    int count = 0;
    auto on_side = [&](const Node& x) { return left ? x.col < col : x.col > col; };
    for (const auto& x : addable_nodes(lam, i, p))
        if (on_side(x)) ++count;
    for (const auto& x : removable_nodes(lam, i, p))
        if (on_side(x)) --count;
    return count;
}

}  // namespace

FockVector f_action(int i, const FockVector& v, const Prime& p) {
    FockVector out(v.degree() + 1);
    for (const auto& [lam, c] : v.terms()) {
        for (const auto& g : addable_nodes(lam, i, p)) {
            int exponent = signed_count(lam, i, p, g.col, true);
            out.add_term(lam.with_node(g), LaurentPoly::monomial(exponent) * c);
        }
    }
    return out;
}

FockVector e_action(int i, const FockVector& v, const Prime& p) {
    if (v.degree() == 0) return FockVector(0);
    FockVector out(v.degree() - 1);
    for (const auto& [mu, c] : v.terms()) {
        for (const auto& g : removable_nodes(mu, i, p)) {
            int exponent = -signed_count(mu, i, p, g.col, false);
            out.add_term(mu.without_node(g), LaurentPoly::monomial(exponent) * c);
        }
    }
    return out;
}

FockVector divided_f(int i, int k, const FockVector& v, const Prime& p) {
    if (k < 1) throw std::invalid_argument("divided power exponent must be positive");
    FockVector w = v;
    for (int r = 0; r < k; ++r) w = f_action(i, w, p);
    if (k == 1) return w;
    const LaurentPoly fact = gaussian_factorial(k);
    FockVector out(w.degree());
    for (const auto& [lam, c] : w.terms()) {
        try {
            out.add_term(lam, c.exact_divide(fact));
        } catch (const std::domain_error&) {
            throw std::logic_error("divided power f_" + std::to_string(i) + "^(" + std::to_string(k) +
                                   ") is not integral at (" + lam.to_string() + ")");
        }
    }
    return out;
}

FockVector first_approximation(const Partition& mu, const Prime& p) {
    auto lad = ladder_decomposition(mu, p);
    FockVector v = FockVector::basis(Partition());
    for (int k = 0; k < lad.count(); ++k) v = divided_f(lad.residues[k], lad.sizes[k], v, p);
    return v;
}

LaurentPoly CanonicalBasisTable::n_entry(const Partition& lambda, const Partition& mu) const {
    auto it = nmat.find({lambda, mu});
    return it == nmat.end() ? LaurentPoly() : it->second;
}

int CanonicalBasisTable::index_of(const Partition& lambda) const {
    for (std::size_t k = 0; k < order.size(); ++k)
        if (order[k] == lambda) return static_cast<int>(k);
    return -1;
}

CanonicalBasisTable llt_canonical(int n, const Prime& p, TieBreak tie, int jobs) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    CanonicalBasisTable table;
    table.p = p.value();
    table.n = n;
    table.order = sort_by_dominance(restricted_partitions(n, p), tie);

    // Position of every partition of n in a dominance-compatible total order.
    std::map<Partition, int> rank;
    {
        auto all = sort_by_dominance(partitions_of(n), tie);
        for (std::size_t k = 0; k < all.size(); ++k) rank.emplace(all[k], static_cast<int>(k));
    }

    std::vector<FockVector> approx(table.order.size());
    parallel_for(table.order.size(), jobs,
                 [&](std::size_t k) { approx[k] = first_approximation(table.order[k], p); });

    for (std::size_t k = 0; k < table.order.size(); ++k) {
        const Partition& mu = table.order[k];
        const FockVector& a = approx[k];
        if (a.coeff(mu) != LaurentPoly(1))
            throw std::logic_error("A(" + mu.to_string() + ") does not contain mu with coefficient 1");

        FockVector g = a;
        for (;;) {
            // The least dominant offending term first: subtracting G(ν)
            // only touches partitions dominating ν, so each ν is final once fixed.
            const Partition* worst = nullptr;
            for (const auto& [nu, c] : g.terms()) {
                if (nu == mu || c.in_q_positive()) continue;
                if (!worst || rank.at(nu) > rank.at(*worst)) worst = &nu;
            }
            if (!worst) break;
            const Partition nu = *worst;
            if (!is_p_restricted(nu, p))
                throw std::logic_error("LLT: coefficient of non-restricted (" + nu.to_string() +
                                       ") in A(" + mu.to_string() + ") is not in qZ[q]");
            if (dominance_compare(nu, mu) != Dominance::greater)
                throw std::logic_error("LLT: triangularity fails at (" + nu.to_string() + ") in A(" +
                                       mu.to_string() + ")");
            LaurentPoly corr = bar_symmetric_lower_part(g.coeff(nu));
            g -= corr * table.G.at(nu);
            if (!g.coeff(nu).in_q_positive())
                throw std::logic_error("LLT: correction at (" + nu.to_string() + ") did not land in qZ[q]");
            table.nmat[{nu, mu}] += corr;
            if (table.nmat[{nu, mu}].is_zero()) table.nmat.erase({nu, mu});
        }
        for (const auto& [nu, c] : g.terms())
            if (nu != mu && !c.in_q_positive())
                throw std::logic_error("G(" + mu.to_string() + ") is not congruent to mu mod qL");

        // Reconstruct A(μ) = G(μ) + Σ n_{νμ} G(ν).
        FockVector rebuilt = g;
        for (const auto& nu : table.order) {
            auto c = table.n_entry(nu, mu);
            if (c.is_zero()) continue;
            if (!c.is_bar_invariant())
                throw std::logic_error("n(" + nu.to_string() + ", " + mu.to_string() + ") is not bar-invariant");
            rebuilt += c * table.G.at(nu);
        }
        if (!(rebuilt == a)) throw std::logic_error("A(" + mu.to_string() + ") != Σ n·G");

        table.nmat[{mu, mu}] = LaurentPoly(1);
        table.A.emplace(mu, a);
        table.G.emplace(mu, std::move(g));
    }
    return table;
}

IntMatrix nmat_at_one(const CanonicalBasisTable& table) {
    const std::size_t m = table.order.size();
    IntMatrix out(m, std::vector<mpz_class>(m, 0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
            out[r][c] = table.n_entry(table.order[r], table.order[c]).at_one();
    return out;
}

IntMatrix invert_unitriangular(const IntMatrix& m) {
    const std::size_t size = m.size();
    for (std::size_t r = 0; r < size; ++r) {
        if (m[r].size() != size) throw std::invalid_argument("matrix is not square");
        if (m[r][r] != 1) throw std::invalid_argument("diagonal entry is not 1");
        for (std::size_t c = 0; c < r; ++c)
            if (m[r][c] != 0) throw std::invalid_argument("matrix is not upper unitriangular");
    }
    // Back substitution on M X = I, column by column.
    IntMatrix x(size, std::vector<mpz_class>(size, 0));
    for (std::size_t c = 0; c < size; ++c) {
        for (std::size_t rr = size; rr-- > 0;) {
            mpz_class v = (rr == c) ? 1 : 0;
            for (std::size_t k = rr + 1; k < size; ++k) v -= m[rr][k] * x[k][c];
            x[rr][c] = v;
        }
    }
    return x;
}

}  // namespace modrep
