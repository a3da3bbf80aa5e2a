#pragma once

#include <map>
#include <vector>

#include "modrep/laurent.hpp"
#include "modrep/partition.hpp"

namespace modrep {

template <class T>
using Matrix = std::vector<std::vector<T>>;

using IntMatrix = Matrix<mpz_class>;

/// Element of the q-Fock space with Laurent coefficients, homogeneous of degree n.
class FockVector {
public:
    using Terms = std::map<Partition, LaurentPoly>;

    explicit FockVector(int n = 0) : n_(n) {}
    static FockVector basis(const Partition& lambda);

    int degree() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    LaurentPoly coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const LaurentPoly& c);
    bool is_zero() const noexcept { return terms_.empty(); }

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator*(const LaurentPoly& c, const FockVector& v);

    /// Every coefficient is fixed by q ↦ q^{-1}. This is not the Fock-space bar
    /// involution, which also moves basis vectors.
    bool coefficients_bar_symmetric() const;
    bool operator==(const FockVector& o) const { return n_ == o.n_ && terms_ == o.terms_; }

private:
    int n_;
    Terms terms_;
};

/// f_i λ = Σ q^{N_i^l(γ)} (λ ∪ γ) over addable i-nodes γ; N_i^l counts addable
/// minus removable i-nodes in strictly smaller columns.
FockVector f_action(int i, const FockVector& v, const Prime& p);
/// e_i μ = Σ q^{-N_i^r(γ)} (μ \ γ) over removable i-nodes γ; N_i^r uses
/// strictly larger columns.
FockVector e_action(int i, const FockVector& v, const Prime& p);

/// f_i^k / [k]_q!. Throws std::logic_error if the division is inexact.
FockVector divided_f(int i, int k, const FockVector& v, const Prime& p);

/// A(μ): ladder-ordered divided powers applied to the empty partition.
FockVector first_approximation(const Partition& mu, const Prime& p);

/// A(μ), G(μ) and the transition matrix n_{λμ}(q) for all p-restricted μ ⊢ n.
struct CanonicalBasisTable {
    int p = 3;
    int n = 0;
    std::vector<Partition> order;  // most dominant first
    std::map<Partition, FockVector> A;
    std::map<Partition, FockVector> G;
    /// nmat[{λ, μ}] = n_{λμ}(q); absent entries are zero.
    std::map<std::pair<Partition, Partition>, LaurentPoly> nmat;

    LaurentPoly n_entry(const Partition& lambda, const Partition& mu) const;
    int index_of(const Partition& lambda) const;
};

/// LLT recursion. Throws std::logic_error if bar-invariance, triangularity
/// or the reconstruction A = Σ n·G fails.
CanonicalBasisTable llt_canonical(int n, const Prime& p, TieBreak tie = TieBreak::lex_descending,
                                  int jobs = 1);

/// Matrix of n_{λμ}(1) in table order (row λ, column μ).
IntMatrix nmat_at_one(const CanonicalBasisTable& table);

/// Exact inverse of a unitriangular integer matrix whose nonzero
/// off-diagonal entries sit above the diagonal. Throws std::invalid_argument otherwise.
IntMatrix invert_unitriangular(const IntMatrix& m);

}  // namespace modrep
