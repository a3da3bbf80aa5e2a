#include "modrep/verify.hpp"

#include <mutex>

#include "modrep/parallel.hpp"

namespace modrep {

namespace {

struct Column {
    bool ladder_violation = false;
    std::vector<int> ranks;  // indexed like `order`
};

// Integral lattice spans of S(τ), built on demand for the class-eigenspace path.
class LatticeCache {
public:
    const std::vector<SeminormalVector>& get(const Partition& tau) {
        std::lock_guard lock(mutex_);
        auto it = spans_.find(tau);
        if (it == spans_.end()) it = spans_.emplace(tau, integral_basis(tau)).first;
        return it->second;
    }

private:
    std::mutex mutex_;
    std::map<Partition, std::vector<SeminormalVector>> spans_;
};

// dim ẽ_μ D(τ) for one μ against every τ in `order`. When a ladder of μ is too
// long for the symmetrizer, the class-eigenspace rank is used instead.
Column column_for(const Partition& mu, const std::vector<Partition>& order, const Prime& p,
                  const VerifyOptions& opts, LatticeCache& lattices) {
    Column col;
    col.ranks.assign(order.size(), 0);
    auto lad = ladder_decomposition(mu, p);
    for (int m : lad.sizes)
        if (m >= p.value()) col.ladder_violation = true;
    std::map<Partition, std::vector<StandardTableau>> by_shape;
    for (auto& t : tableau_class(lad.ladder_residue_sequence, opts.limits)) {
        Partition shape = t.shape();
        by_shape[shape].push_back(std::move(t));
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
        auto it = by_shape.find(order[k]);
        if (it == by_shape.end()) continue;
        col.ranks[k] = col.ladder_violation ? divided_power_dim(lad, lattices.get(order[k]), p)
                                            : gram_report(lad, order[k], it->second, p, opts.strategy).rank;
    }
    return col;
}

}  // namespace

IntMatrix m_matrix(int n, const Prime& p, const VerifyOptions& opts) {
    auto order = restricted_partitions(n, p);
    for (const auto& mu : order)
        if (!validate_ladder_lengths(mu, p))
            throw LadderLengthError("(" + mu.to_string() + ") has a ladder with at least p nodes");
    std::vector<Column> cols(order.size());
    LatticeCache lattices;
    parallel_for(order.size(), opts.jobs,
                 [&](std::size_t k) { cols[k] = column_for(order[k], order, p, opts, lattices); });
    IntMatrix m(order.size(), std::vector<mpz_class>(order.size(), 0));
    for (std::size_t c = 0; c < order.size(); ++c)
        for (std::size_t r = 0; r < order.size(); ++r) m[r][c] = cols[c].ranks[r];
    return m;
}

VerificationReport conjecture_check(const CanonicalBasisTable& table, const VerifyOptions& opts) {
    const Prime p(table.p);
    VerificationReport rep;
    rep.p = table.p;
    rep.n = table.n;
    rep.outside_region = table.n >= table.p * table.p;
    rep.order = table.order;
    const std::size_t size = rep.order.size();

    rep.nmat1 = nmat_at_one(table);
    rep.amat = invert_unitriangular(rep.nmat1);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            if (rep.nmat1[r][c] < 0) rep.negative_entries.emplace_back(rep.order[r], rep.order[c]);
            if (!table.n_entry(rep.order[r], rep.order[c]).is_constant()) rep.all_constant = false;
        }

    std::vector<Column> cols(size);
    LatticeCache lattices;
    parallel_for(size, opts.jobs,
                 [&](std::size_t k) { cols[k] = column_for(rep.order[k], rep.order, p, opts, lattices); });
    rep.mmat.assign(size, std::vector<mpz_class>(size, 0));
    for (std::size_t c = 0; c < size; ++c) {
        if (cols[c].ladder_violation) rep.ladder_violations.push_back(rep.order[c]);
        for (std::size_t r = 0; r < size; ++r) rep.mmat[r][c] = cols[c].ranks[r];
    }

    bool all_pass = true;
    for (std::size_t m = 0; m < size; ++m) {
        for (std::size_t t = 0; t < size; ++t) {
            ConjectureCheck chk;
            chk.mu = rep.order[m];
            chk.tau = rep.order[t];
            chk.expected = (m == t) ? 1 : 0;
            for (std::size_t l = 0; l < size; ++l) chk.lhs += rep.amat[l][m] * rep.mmat[t][l];
            chk.pass = chk.lhs == chk.expected;
            all_pass = all_pass && chk.pass;
            rep.checks.push_back(std::move(chk));
        }
    }
    rep.overall = all_pass;

    if (rep.overall) {
        rep.decomposition_rows = partitions_of(table.n);
        rep.decomposition.assign(rep.decomposition_rows.size(), std::vector<mpz_class>(size, 0));
        for (std::size_t r = 0; r < rep.decomposition_rows.size(); ++r)
            for (std::size_t c = 0; c < size; ++c)
                rep.decomposition[r][c] = table.G.at(rep.order[c]).coeff(rep.decomposition_rows[r]).at_one();
    }
    return rep;
}

VerificationReport conjecture_check(int n, const Prime& p, const VerifyOptions& opts) {
    return conjecture_check(llt_canonical(n, p, TieBreak::lex_descending, opts.jobs), opts);
}

RationalMatrix integral_gram(const Partition& tau, const OracleOptions& opts) {
    auto tabs = standard_tableaux(tau);
    if (tabs.size() > opts.max_dimension && !opts.allow_large)
        throw std::length_error("dim S(" + tau.to_string() + ") = " + std::to_string(tabs.size()) +
                                " exceeds the oracle limit of " + std::to_string(opts.max_dimension));
    auto g = gram_matrix(integral_basis(tau));
    for (const auto& row : g)
        for (const auto& x : row)
            if (x.get_den() != 1)
                throw std::logic_error("Gram entry " + x.get_str() + " of S(" + tau.to_string() +
                                       ") is not an integer");
    return g;
}

int gram_oracle_dimD(const Partition& tau, const Prime& p, const OracleOptions& opts) {
    return modp_rank(integral_gram(tau, opts), p).rank;
}

ConsistencyResult consistency_check(const VerificationReport& report, const OracleOptions& opts, int jobs) {
    ConsistencyResult res;
    if (!report.overall) {
        res.diffs.push_back("conjecture check did not pass; no decomposition matrix to check");
        return res;
    }
    const Prime p(report.p);
    const std::size_t cols = report.order.size();
    std::vector<int> dim_d(cols, 0);
    parallel_for(cols, jobs, [&](std::size_t c) { dim_d[c] = gram_oracle_dimD(report.order[c], p, opts); });

    for (std::size_t r = 0; r < report.decomposition_rows.size(); ++r) {
        const Partition& tau = report.decomposition_rows[r];
        mpz_class total = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            const mpz_class& d = report.decomposition[r][c];
            total += d * dim_d[c];
            const Partition& mu = report.order[c];
            if (tau == mu && d != 1)
                res.diffs.push_back("d(" + tau.to_string() + ", " + mu.to_string() + ") = " + d.get_str() +
                                    ", expected 1");
            if (tau != mu && d != 0 && !dominates(tau, mu))
                res.diffs.push_back("d(" + tau.to_string() + ", " + mu.to_string() + ") = " + d.get_str() +
                                    " although tau does not dominate mu");
        }
        const mpz_class dim_s = hook_formula_count(tau);
        if (total != dim_s)
            res.diffs.push_back("dim S(" + tau.to_string() + ") = " + dim_s.get_str() + " but Σ d·dim D = " +
                                total.get_str());
    }
    res.ok = res.diffs.empty();
    return res;
}

ConsistencyResult consistency_check(int n, const Prime& p, const VerifyOptions& opts) {
    auto rep = conjecture_check(n, p, opts);
    return consistency_check(rep, OracleOptions{}, opts.jobs);
}

}  // namespace modrep
