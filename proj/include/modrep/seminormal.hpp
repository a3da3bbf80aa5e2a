#pragma once

#include <gmpxx.h>

#include <map>

#include "modrep/partition.hpp"
#include "modrep/tableau.hpp"

namespace modrep {

/// Exact rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Whether the denominator of x is prime to p (x lies in Z localized at p).
bool is_p_integral(const Rational& x, const Prime& p);

/// Sparse rational combination of seminormal basis vectors ξ_t of S(λ)_Q.
class SeminormalVector {
public:
    using Coeffs = std::map<StandardTableau, Rational>;

    explicit SeminormalVector(Partition shape) : shape_(std::move(shape)) {}
    /// The basis vector ξ_t.
    static SeminormalVector basis(const StandardTableau& t);

    const Partition& shape() const noexcept { return shape_; }
    const Coeffs& coeffs() const noexcept { return coeffs_; }
    Rational coeff(const StandardTableau& t) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t term_count() const noexcept { return coeffs_.size(); }

    /// Adds c·ξ_t; throws if t has a different shape.
    void add_term(const StandardTableau& t, const Rational& c);

    SeminormalVector& operator+=(const SeminormalVector& o);
    SeminormalVector& operator-=(const SeminormalVector& o);
    SeminormalVector& operator*=(const Rational& c);
    friend SeminormalVector operator*(const Rational& c, SeminormalVector v) { return v *= c; }
    friend SeminormalVector operator+(SeminormalVector a, const SeminormalVector& b) { return a += b; }
    friend SeminormalVector operator-(SeminormalVector a, const SeminormalVector& b) { return a -= b; }

    bool operator==(const SeminormalVector& o) const {
        return shape_ == o.shape_ && coeffs_ == o.coeffs_;
    }

private:
    Partition shape_;
    Coeffs coeffs_;
};

/// γ_t = Π_{i=2}^n γ_{ti}, the squared norm of ξ_t.
Rational gamma(const StandardTableau& t);

/// Radial distance h = c(i-1) - c(i).
inline int radial_distance(const StandardTableau& s, int i) {
    return s.content(i - 1) - s.content(i);
}

/// Young's seminormal action of σ_i = (i-1, i).
SeminormalVector sigma_action(int i, const SeminormalVector& v);

/// Jucys-Murphy element L_k, diagonal with eigenvalue c_t(k); L_1 = 0.
SeminormalVector jm_action(int k, const SeminormalVector& v);

/// Intertwiner φ_i = σ_i + 1/(L_{i-1} - L_i) in its modular realisation:
/// terms with p | h use the singular formula σ_i + 1.
SeminormalVector phi_action(int i, const SeminormalVector& v, const Prime& p);

/// Σ_t u_t v_t γ_t. Throws SizeMismatch on differing shapes.
Rational inner_product(const SeminormalVector& u, const SeminormalVector& v);

/// Keeps the terms ξ_t whose residue sequence equals `seq`.
SeminormalVector class_project(const ResidueSequence& seq, const SeminormalVector& v);

}  // namespace modrep
