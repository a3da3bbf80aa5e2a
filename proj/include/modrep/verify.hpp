#pragma once

#include <map>
#include <string>
#include <vector>

#include "modrep/eigenspace.hpp"
#include "modrep/fock.hpp"

namespace modrep {

struct VerifyOptions {
    int jobs = 1;
    EnumerationLimits limits{};
    WordStrategy strategy = WordStrategy::leftmost_descent;
};

/// One identity dim ẽ_μ D(τ) + Σ_{λ ▷ μ} a_{λμ} dim ẽ_λ D(τ) = δ_{μτ}.
struct ConjectureCheck {
    Partition mu;
    Partition tau;
    mpz_class lhs;
    int expected = 0;
    bool pass = false;
};

struct VerificationReport {
    int p = 3;
    int n = 0;
    bool outside_region = false;  // n >= p^2
    std::vector<Partition> order;
    IntMatrix nmat1;              // n_{λμ}(1), row λ, column μ
    IntMatrix amat;               // inverse of nmat1
    IntMatrix mmat;               // m[λ][μ] = dim ẽ_μ D(λ)
    std::vector<ConjectureCheck> checks;
    bool overall = false;
    /// μ whose ladders are too long for the symmetrizer to exist mod p. Their
    /// m-columns come from the class-eigenspace rank divided by the ladder group order.
    std::vector<Partition> ladder_violations;
    /// Entries with n_{λμ}(1) < 0, as (λ, μ).
    std::vector<std::pair<Partition, Partition>> negative_entries;
    /// Whether every n_{λμ}(q) is a constant polynomial.
    bool all_constant = true;
    /// d_{τμ}, rows all τ ⊢ n (most dominant first), columns `order`. Filled only when overall.
    std::vector<Partition> decomposition_rows;
    IntMatrix decomposition;

    bool nonnegative() const { return negative_entries.empty(); }
};

/// m[λ][μ] = dim ẽ_μ D(λ) over p-restricted λ, μ in canonical order.
/// Throws LadderLengthError naming the first offending μ.
IntMatrix m_matrix(int n, const Prime& p, const VerifyOptions& opts = {});

/// Runs the full verification. Ladder-length violations and failed identities
/// are recorded in the report rather than thrown.
VerificationReport conjecture_check(int n, const Prime& p, const VerifyOptions& opts = {});

/// Same, reusing an existing canonical basis table.
VerificationReport conjecture_check(const CanonicalBasisTable& table, const VerifyOptions& opts = {});

struct OracleOptions {
    std::size_t max_dimension = 20000;
    bool allow_large = false;
};

/// Gram matrix of the integral basis x_s = d(s) ξ_{t^τ} of S(τ) on all of Std(τ).
/// Throws std::logic_error if an entry is not an integer.
RationalMatrix integral_gram(const Partition& tau, const OracleOptions& opts = {});

/// dim D(τ) as the p-rank of the full integral Gram matrix.
int gram_oracle_dimD(const Partition& tau, const Prime& p, const OracleOptions& opts = {});

struct ConsistencyResult {
    bool ok = false;
    std::vector<std::string> diffs;
};

/// dim S(τ) = Σ_μ d_{τμ} dim D(μ) plus unitriangularity of d. Requires overall.
ConsistencyResult consistency_check(const VerificationReport& report, const OracleOptions& opts = {},
                                    int jobs = 1);
ConsistencyResult consistency_check(int n, const Prime& p, const VerifyOptions& opts = {});

}  // namespace modrep
