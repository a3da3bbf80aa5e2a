#include "properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace modrep::props {

namespace {

std::string show(const Partition& p) { return "(" + p.to_string() + ")"; }

int rank_over_q(RationalMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// All elements of the ladder group, as one-line permutations of 1..n.
std::vector<std::vector<int>> ladder_group(const LadderData& lad) {
    const int n = lad.shape.size();
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    std::vector<std::vector<int>> group{id};
    for (int k = 1; k <= lad.count(); ++k) {
        auto [lo, hi] = lad.interval(k);
        std::vector<int> block(hi - lo + 1);
        std::iota(block.begin(), block.end(), lo);
        std::vector<std::vector<int>> next;
        for (const auto& g : group) {
            std::vector<int> perm = block;
            do {
                auto h = g;
                for (int x = lo; x <= hi; ++x) h[x - 1] = perm[x - lo];
                next.push_back(std::move(h));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        group = std::move(next);
    }
    return group;
}

std::map<Partition, std::vector<StandardTableau>> class_by_shape(const LadderData& lad) {
    std::map<Partition, std::vector<StandardTableau>> out;
    for (auto& t : tableau_class(lad.ladder_residue_sequence)) {
        Partition s = t.shape();
        out[s].push_back(std::move(t));
    }
    return out;
}

std::vector<Partition> restricted_with_short_ladders(int n, const Prime& p) {
    std::vector<Partition> out;
    for (auto& mu : restricted_partitions(n, p))
        if (validate_ladder_lengths(mu, p)) out.push_back(std::move(mu));
    return out;
}

}  // namespace

SeminormalVector random_vector(const Partition& shape, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    SeminormalVector v(shape);
    for (const auto& t : standard_tableaux(shape)) v.add_term(t, coeff(rng));
    return v;
}

PropertyResult dominance_partial_order(int max_n) {
    PropertyResult res;
    for (int n = 0; n <= max_n; ++n) {
        auto parts = partitions_of(n);
        for (const auto& a : parts) {
            if (dominance_compare(a, a) != Dominance::equal) res.fail("not reflexive at " + show(a));
            for (const auto& b : parts) {
                ++res.cases;
                auto ab = dominance_compare(a, b), ba = dominance_compare(b, a);
                if ((ab == Dominance::greater) != (ba == Dominance::less))
                    res.fail("asymmetric comparison " + show(a) + " " + show(b));
                if (a != b && ab == Dominance::equal) res.fail("distinct partitions compare equal");
                if (a != b && dominates(a, b) && total_order(a, b) != std::strong_ordering::less)
                    res.fail("total order does not refine dominance at " + show(a) + " " + show(b));
                if (!dominates(a, b)) continue;
                for (const auto& c : parts)
                    if (dominates(b, c) && !dominates(a, c))
                        res.fail("not transitive at " + show(a) + " " + show(b) + " " + show(c));
            }
        }
    }
    return res;
}

PropertyResult addable_removable_duality(int max_n) {
    PropertyResult res;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n)) {
            for (const auto& g : addable_nodes(lam)) {
                ++res.cases;
                auto r = removable_nodes(lam.with_node(g));
                if (std::find(r.begin(), r.end(), g) == r.end())
                    res.fail("addable node of " + show(lam) + " is not removable after adding");
            }
            for (const auto& g : removable_nodes(lam)) {
                ++res.cases;
                auto a = addable_nodes(lam.without_node(g));
                if (std::find(a.begin(), a.end(), g) == a.end())
                    res.fail("removable node of " + show(lam) + " is not addable after removing");
            }
        }
    return res;
}

PropertyResult ladder_structure(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& lam : restricted_partitions(n, p)) {
            ++res.cases;
            auto lad = ladder_decomposition(lam, p);
            if (lad.limits.front() != 0 || lad.limits.back() != n) res.fail("limits do not span 1..n for " + show(lam));
            for (int k = 1; k <= lad.count(); ++k) {
                auto [lo, hi] = lad.interval(k);
                if (hi - lo + 1 != lad.sizes[k - 1]) res.fail("interval size mismatch for " + show(lam));
                for (int e = lo; e <= hi; ++e) {
                    if (lad.ladder_residue_sequence[e] != lad.residues[k - 1])
                        res.fail("residue not constant on a ladder of " + show(lam));
                    if (lad.ladder_tableau.node(e) != lad.ladders[k - 1][e - lo])
                        res.fail("ladder tableau does not fill ladder " + std::to_string(k) + " of " + show(lam));
                }
            }
            if (!lad.ladder_tableau.as_tableau().is_standard()) res.fail("ladder tableau not standard");
        }
    return res;
}

PropertyResult ladder_length_lemma(const Prime& p, int below_n) {
    PropertyResult res;
    for (int n = 0; n < below_n; ++n)
        for (const auto& lam : restricted_partitions(n, p)) {
            ++res.cases;
            if (!validate_ladder_lengths(lam, p)) res.fail("long ladder in " + show(lam));
        }
    return res;
}

PropertyResult class_partition(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n)) {
            std::map<ResidueSequence, std::size_t> counts;
            auto tabs = standard_tableaux(lam);
            for (const auto& t : tabs) ++counts[residue_sequence(t, p)];
            std::size_t total = 0;
            for (const auto& [seq, c] : counts) {
                ++res.cases;
                auto cls = tableau_class_of_shape(seq, lam);
                if (cls.size() != c) res.fail("class size mismatch in " + show(lam) + " for " + seq.to_string());
                total += cls.size();
            }
            if (total != hook_formula_count(lam) || tabs.size() != total)
                res.fail("classes do not partition Std" + show(lam));
        }
    return res;
}

PropertyResult ladder_minimality(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& lam : restricted_partitions(n, p)) {
            auto lad = ladder_decomposition(lam, p);
            for (const auto& t : tableau_class(lad.ladder_residue_sequence)) {
                ++res.cases;
                if (t.shape() == lam) {
                    if (!in_ladder_orbit(lad, t)) res.fail(t.to_string() + " has shape " + show(lam) + " but is off the orbit");
                } else if (dominance_compare(t.shape(), lam) != Dominance::greater) {
                    res.fail(t.to_string() + " in the ladder class of " + show(lam) + " is not more dominant");
                }
            }
        }
    return res;
}

PropertyResult ladder_group_action(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : restricted_with_short_ladders(n, p)) {
            auto lad = ladder_decomposition(mu, p);
            auto group = ladder_group(lad);
            if (group.size() != lad.group_order()) res.fail("group enumeration size mismatch for " + show(mu));
            for (const auto& [shape, tabs] : class_by_shape(lad)) {
                ++res.cases;
                if (tabs.size() % lad.group_order() != 0)
                    res.fail("|T| not divisible by the ladder group order for " + show(mu) + ", " + show(shape));
                std::set<StandardTableau> members(tabs.begin(), tabs.end());
                for (const auto& t : tabs) {
                    std::set<StandardTableau> orbit;
                    for (const auto& g : group) {
                        auto moved = place_permute(g, t.as_tableau());
                        if (!moved.is_standard()) {
                            res.fail("ladder group moves " + t.to_string() + " off Std");
                            continue;
                        }
                        auto s = StandardTableau::from_rows(moved.rows);
                        if (!members.count(s)) res.fail("ladder group moves " + t.to_string() + " out of T");
                        orbit.insert(s);
                    }
                    if (orbit.size() != group.size()) res.fail("orbit of " + t.to_string() + " is not free");
                }
            }
        }
    return res;
}

PropertyResult reduced_word_round_trip(int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n)) {
            const auto top = StandardTableau::row_reading(lam).as_tableau();
            for (const auto& t : standard_tableaux(lam))
                for (auto strat : {WordStrategy::leftmost_descent, WordStrategy::rightmost_descent}) {
                    ++res.cases;
                    auto pw = d_reduced_word(t, strat);
                    if (word_to_permutation(pw.word, n) != pw.one_line) res.fail("word does not compose to d(" + t.to_string() + ")");
                    if (static_cast<int>(pw.word.size()) != inversion_count(pw.one_line))
                        res.fail("word for " + t.to_string() + " is not reduced");
                    if (!(place_permute(pw.one_line, top) == t.as_tableau()))
                        res.fail("d(" + t.to_string() + ") does not carry t^lambda to t");
                }
        }
    return res;
}

PropertyResult coxeter_relations(int max_n) {
    PropertyResult res;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& t : standard_tableaux(lam)) {
                const auto v = SeminormalVector::basis(t);
                for (int i = 2; i <= n; ++i) {
                    ++res.cases;
                    if (!(sigma_action(i, sigma_action(i, v)) == v)) res.fail("sigma_" + std::to_string(i) + "^2 != 1 on " + show(lam));
                    for (int j = i + 2; j <= n; ++j)
                        if (!(sigma_action(i, sigma_action(j, v)) == sigma_action(j, sigma_action(i, v))))
                            res.fail("far generators do not commute on " + show(lam));
                    if (i < n) {
                        auto lhs = sigma_action(i, sigma_action(i + 1, sigma_action(i, v)));
                        auto rhs = sigma_action(i + 1, sigma_action(i, sigma_action(i + 1, v)));
                        if (!(lhs == rhs)) res.fail("braid relation fails on " + show(lam));
                    }
                }
            }
    return res;
}

PropertyResult form_invariance(int max_n, int pairs_per_shape, unsigned seed) {
    PropertyResult res;
    std::mt19937 rng(seed);
    for (int n = 2; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (int k = 0; k < pairs_per_shape; ++k) {
                auto u = random_vector(lam, rng), v = random_vector(lam, rng);
                const Rational base = inner_product(u, v);
                for (int i = 2; i <= n; ++i) {
                    ++res.cases;
                    if (inner_product(sigma_action(i, u), sigma_action(i, v)) != base)
                        res.fail("form not sigma_" + std::to_string(i) + "-invariant on " + show(lam));
                }
            }
    return res;
}

PropertyResult jm_commutation(int max_n) {
    PropertyResult res;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& t : standard_tableaux(lam)) {
                const auto v = SeminormalVector::basis(t);
                for (int i = 2; i <= n; ++i) {
                    for (int k = 1; k <= n; ++k) {
                        if (k == i - 1 || k == i) continue;
                        ++res.cases;
                        if (!(sigma_action(i, jm_action(k, v)) == jm_action(k, sigma_action(i, v))))
                            res.fail("L_" + std::to_string(k) + " does not commute with sigma_" + std::to_string(i));
                    }
                    ++res.cases;
                    auto pair = [&](const SeminormalVector& w) { return jm_action(i - 1, w) + jm_action(i, w); };
                    if (!(sigma_action(i, pair(v)) == pair(sigma_action(i, v))))
                        res.fail("L_{i-1} + L_i does not commute with sigma_" + std::to_string(i));
                }
            }
    return res;
}

PropertyResult intertwining(const Prime& p, int max_n, unsigned seed) {
    PropertyResult res;
    std::mt19937 rng(seed);
    for (int n = 2; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n)) {
            std::set<ResidueSequence> classes;
            for (const auto& t : standard_tableaux(lam)) classes.insert(residue_sequence(t, p));
            for (int k = 0; k < 3; ++k) {
                const auto v = random_vector(lam, rng);
                for (const auto& seq : classes)
                    for (int i = 2; i <= n; ++i) {
                        ++res.cases;
                        auto lhs = class_project(seq.swapped(i), phi_action(i, v, p));
                        auto rhs = phi_action(i, class_project(seq, v), p);
                        if (!(lhs == rhs)) res.fail("phi_" + std::to_string(i) + " does not intertwine " + seq.to_string());
                    }
            }
        }
    return res;
}

PropertyResult phi_kernel(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& t : standard_tableaux(lam))
                for (int i = 2; i <= n; ++i) {
                    ++res.cases;
                    const int h = radial_distance(t, i);
                    const bool zero = phi_action(i, SeminormalVector::basis(t), p).is_zero();
                    if (zero != (h == 1 || h == -1)) res.fail("phi_" + std::to_string(i) + " kernel wrong at " + t.to_string());
                }
    return res;
}

PropertyResult weight_space_count(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : restricted_partitions(n, p)) {
            auto lad = ladder_decomposition(mu, p);
            auto a = first_approximation(mu, p);
            auto classes = class_by_shape(lad);
            for (const auto& lam : partitions_of(n)) {
                ++res.cases;
                auto it = classes.find(lam);
                const std::size_t t_size = it == classes.end() ? 0 : it->second.size();
                if (a.coeff(lam).at_one() * mpz_class(lad.group_order()) != mpz_class(t_size))
                    res.fail("A" + show(mu) + " at " + show(lam) + " times |S_lad| != |T|");
            }
        }
    return res;
}

PropertyResult approximation_triangularity(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : restricted_partitions(n, p)) {
            auto a = first_approximation(mu, p);
            if (a.coeff(mu) != LaurentPoly(1)) res.fail("A" + show(mu) + " lacks mu with coefficient 1");
            for (const auto& [lam, c] : a.terms()) {
                ++res.cases;
                if (!dominates(lam, mu)) res.fail("A" + show(mu) + " contains " + show(lam));
            }
        }
    return res;
}

PropertyResult llt_bar_symmetry(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 0; n <= max_n; ++n) {
        auto table = llt_canonical(n, p);
        for (const auto& [key, c] : table.nmat) {
            ++res.cases;
            if (!c.is_bar_invariant()) res.fail("n" + show(key.first) + show(key.second) + " = " + c.to_string());
        }
        for (const auto& mu : table.order) {
            ++res.cases;
            const auto& g = table.G.at(mu);
            if (g.coeff(mu) != LaurentPoly(1)) res.fail("G" + show(mu) + " lacks mu");
            for (const auto& [lam, c] : g.terms())
                if (lam != mu && !c.in_q_positive()) res.fail("G" + show(mu) + " not congruent to mu mod qL");
            FockVector rebuilt(n);
            for (const auto& lam : table.order) rebuilt += table.n_entry(lam, mu) * table.G.at(lam);
            if (!(rebuilt == table.A.at(mu))) res.fail("A" + show(mu) + " is not the bar-symmetric combination of G");
        }
    }
    return res;
}

PropertyResult llt_tiebreak_independence(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 0; n <= max_n; ++n) {
        ++res.cases;
        auto a = llt_canonical(n, p, TieBreak::lex_descending);
        auto b = llt_canonical(n, p, TieBreak::lex_ascending);
        if (a.G != b.G || a.nmat != b.nmat) res.fail("LLT output depends on the tiebreak at n = " + std::to_string(n));
    }
    return res;
}

// Solves G(μ) = A(μ) + Σ_{ν≠μ} c_ν(q) A(ν) with c_ν bar-symmetric and every
// non-μ coefficient of G in qZ[q], as one linear system over Q.
PropertyResult llt_linear_algebra_oracle(const Prime& p, int n) {
    PropertyResult res;
    constexpr int kMaxDegree = 3;
    const auto order = restricted_partitions(n, p);
    std::map<Partition, FockVector> approx;
    for (const auto& mu : order) approx.emplace(mu, first_approximation(mu, p));
    auto table = llt_canonical(n, p);

    for (const auto& mu : order) {
        ++res.cases;
        // Unknown (ν, k) multiplies (q^k + q^{-k}) A(ν), or A(ν) for k = 0.
        std::vector<std::pair<Partition, int>> unknowns;
        for (const auto& nu : order)
            if (nu != mu)
                for (int k = 0; k <= kMaxDegree; ++k) unknowns.emplace_back(nu, k);
        std::vector<FockVector> columns;
        for (const auto& [nu, k] : unknowns) {
            LaurentPoly sym = k == 0 ? LaurentPoly(1) : LaurentPoly::monomial(k) + LaurentPoly::monomial(-k);
            columns.push_back(sym * approx.at(nu));
        }
        // One equation per (λ ≠ μ, degree ≤ 0) that appears anywhere.
        std::set<std::pair<Partition, int>> eqs;
        auto collect = [&](const FockVector& v) {
            for (const auto& [lam, c] : v.terms())
                for (const auto& [e, x] : c.coeffs())
                    if (lam != mu && e <= 0) eqs.emplace(lam, e);
        };
        collect(approx.at(mu));
        for (const auto& c : columns) collect(c);

        const std::size_t cols = unknowns.size();
        RationalMatrix sys;
        for (const auto& [lam, e] : eqs) {
            std::vector<Rational> row(cols + 1);
            for (std::size_t j = 0; j < cols; ++j) row[j] = Rational(columns[j].coeff(lam).coeff(e));
            row[cols] = Rational(-approx.at(mu).coeff(lam).coeff(e));
            sys.push_back(std::move(row));
        }
        // Gauss-Jordan on the augmented system.
        std::vector<int> pivot_col;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < sys.size(); ++c) {
            std::size_t piv = rank;
            while (piv < sys.size() && sys[piv][c] == 0) ++piv;
            if (piv == sys.size()) continue;
            std::swap(sys[piv], sys[rank]);
            const Rational inv = 1 / sys[rank][c];
            for (auto& x : sys[rank]) x *= inv;
            for (std::size_t r = 0; r < sys.size(); ++r) {
                if (r == rank || sys[r][c] == 0) continue;
                const Rational f = sys[r][c];
                for (std::size_t k = c; k <= cols; ++k) sys[r][k] -= f * sys[rank][k];
            }
            pivot_col.push_back(static_cast<int>(c));
            ++rank;
        }
        for (std::size_t r = rank; r < sys.size(); ++r)
            if (sys[r][cols] != 0) res.fail("oracle system inconsistent for " + show(mu));
        if (rank != cols) {
            res.fail("oracle system underdetermined for " + show(mu));
            continue;
        }
        FockVector g = approx.at(mu);
        for (std::size_t r = 0; r < rank; ++r) {
            const Rational& x = sys[r][cols];
            if (x.get_den() != 1) res.fail("non-integral oracle coefficient for " + show(mu));
            g += LaurentPoly(x.get_num().get_si()) * columns[pivot_col[r]];
        }
        if (!(g == table.G.at(mu))) res.fail("oracle G" + show(mu) + " differs from the LLT recursion");
    }
    return res;
}

PropertyResult ef_support_symmetry(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 0; n < max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (int i = 0; i < p.value(); ++i) {
                auto f = f_action(i, FockVector::basis(lam), p);
                for (const auto& [mu, c] : f.terms()) {
                    ++res.cases;
                    if (e_action(i, FockVector::basis(mu), p).coeff(lam).is_zero())
                        res.fail("f_" + std::to_string(i) + show(lam) + " reaches " + show(mu) + " but e does not return");
                }
            }
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : partitions_of(n))
            for (int i = 0; i < p.value(); ++i) {
                auto e = e_action(i, FockVector::basis(mu), p);
                for (const auto& [lam, c] : e.terms()) {
                    ++res.cases;
                    if (f_action(i, FockVector::basis(lam), p).coeff(mu).is_zero())
                        res.fail("e_" + std::to_string(i) + show(mu) + " reaches " + show(lam) + " but f does not return");
                }
            }
    return res;
}

PropertyResult nonnegativity(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 0; n <= max_n; ++n) {
        auto table = llt_canonical(n, p);
        auto m = nmat_at_one(table);
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c) {
                ++res.cases;
                if (m[r][c] < 0)
                    res.fail("n" + show(table.order[r]) + show(table.order[c]) + "(1) = " + m[r][c].get_str());
            }
    }
    return res;
}

PropertyResult symmetrized_dimension(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : restricted_with_short_ladders(n, p)) {
            auto lad = ladder_decomposition(mu, p);
            auto a = first_approximation(mu, p);
            for (const auto& [tau, tabs] : class_by_shape(lad)) {
                ++res.cases;
                auto rep = gram_report(lad, tau, tabs, p);
                if (mpz_class(rep.basis_size) != a.coeff(tau).at_one())
                    res.fail("symmetrized size for " + show(mu) + ", " + show(tau) + " is " + std::to_string(rep.basis_size));
            }
        }
    return res;
}

PropertyResult unsymmetrized_basis(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : restricted_with_short_ladders(n, p)) {
            auto lad = ladder_decomposition(mu, p);
            for (const auto& [tau, tabs] : class_by_shape(lad)) {
                ++res.cases;
                auto basis = phi_chain_basis(tau, tabs, p);
                if (basis.size() != tabs.size()) res.fail("phi-chain size mismatch for " + show(mu) + ", " + show(tau));
                if (rank_over_q(gram_matrix(basis)) != static_cast<int>(basis.size()))
                    res.fail("phi-chain Gram singular over Q for " + show(mu) + ", " + show(tau));
            }
        }
    return res;
}

PropertyResult symmetrized_gram_integrality(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : restricted_with_short_ladders(n, p)) {
            auto lad = ladder_decomposition(mu, p);
            for (const auto& [tau, tabs] : class_by_shape(lad)) {
                ++res.cases;
                auto basis = ladder_average(lad, phi_chain_basis(tau, tabs, p));
                auto g = gram_matrix(basis);
                for (std::size_t r = 0; r < g.size(); ++r)
                    for (std::size_t c = 0; c < g.size(); ++c) {
                        if (!is_p_integral(g[r][c], p))
                            res.fail("Gram entry " + g[r][c].get_str() + " for " + show(mu) + ", " + show(tau));
                        if (g[r][c] != g[c][r]) res.fail("Gram not symmetric");
                    }
            }
        }
    return res;
}

PropertyResult reduced_word_invariance(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : restricted_with_short_ladders(n, p)) {
            auto lad = ladder_decomposition(mu, p);
            for (const auto& [tau, tabs] : class_by_shape(lad)) {
                ++res.cases;
                auto a = gram_report(lad, tau, tabs, p, WordStrategy::leftmost_descent);
                auto b = gram_report(lad, tau, tabs, p, WordStrategy::rightmost_descent);
                if (a.rank != b.rank || a.basis_size != b.basis_size)
                    res.fail("rank depends on the reduced word for " + show(mu) + ", " + show(tau));
            }
        }
    return res;
}

PropertyResult diagonal_multiplicity(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : restricted_with_short_ladders(n, p)) {
            ++res.cases;
            if (int d = dim_e_tilde_D(mu, mu, p); d != 1)
                res.fail("dim e_mu D" + show(mu) + " = " + std::to_string(d));
        }
    return res;
}

PropertyResult subset_rank_matches_full(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& mu : restricted_with_short_ladders(n, p)) {
            auto lad = ladder_decomposition(mu, p);
            for (const auto& [tau, tabs] : class_by_shape(lad)) {
                ++res.cases;
                auto full = ladder_average(lad, phi_chain_basis(tau, tabs, p));
                const int full_rank = modp_rank(gram_matrix(full), p).rank;
                if (full_rank != gram_report(lad, tau, tabs, p).rank)
                    res.fail("independent subset loses rank for " + show(mu) + ", " + show(tau));
            }
        }
    return res;
}

PropertyResult class_rank_agreement(const Prime& p, int max_n) {
    PropertyResult res;
    for (int n = 1; n <= max_n; ++n) {
        std::map<Partition, std::vector<SeminormalVector>> lattices;
        for (const auto& mu : restricted_with_short_ladders(n, p)) {
            auto lad = ladder_decomposition(mu, p);
            for (const auto& [tau, tabs] : class_by_shape(lad)) {
                ++res.cases;
                auto it = lattices.find(tau);
                if (it == lattices.end()) it = lattices.emplace(tau, integral_basis(tau)).first;
                const int via_class = divided_power_dim(lad, it->second, p);
                const int via_chain = gram_report(lad, tau, tabs, p).rank;
                if (via_class != via_chain)
                    res.fail("class-eigenspace rank " + std::to_string(via_class) + " != phi-chain rank " +
                             std::to_string(via_chain) + " for " + show(mu) + ", " + show(tau));
            }
        }
    }
    return res;
}

}  // namespace modrep::props
