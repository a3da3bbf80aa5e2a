#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace modrep {

/// Integer Laurent polynomial in q, stored sparsely with no zero coefficients.
class LaurentPoly {
public:
    using Coeffs = std::map<int, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: constants convert implicitly
    static LaurentPoly monomial(int exponent, const mpz_class& coeff = 1);

    const Coeffs& coeffs() const noexcept { return coeffs_; }
    mpz_class coeff(int exponent) const;
    void set(int exponent, const mpz_class& c);
    void add_term(int exponent, const mpz_class& c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int min_degree() const;  // requires nonzero
    int max_degree() const;  // requires nonzero

    /// q ↦ q^{-1}.
    LaurentPoly bar() const;
    bool is_bar_invariant() const { return bar() == *this; }
    /// Sum of coefficients.
    mpz_class at_one() const;
    /// All exponents > 0.
    bool in_q_positive() const;
    bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// Exact division; throws std::domain_error if `divisor` does not divide.
    LaurentPoly exact_divide(const LaurentPoly& divisor) const;

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

    /// e.g. "q^-1 + 2 + q^3".
    std::string to_string() const;

private:
    Coeffs coeffs_;
};

/// [k]_q = (q^k - q^{-k}) / (q - q^{-1}); [0]_q = 0 and [-k]_q = -[k]_q.
LaurentPoly gaussian(int k);
/// [k]_q! ; [0]_q! = 1.
LaurentPoly gaussian_factorial(int k);

/// The bar-symmetric polynomial agreeing with f in all degrees <= 0:
/// c_0 + Σ_{k>0} c_{-k} (q^k + q^{-k}).
LaurentPoly bar_symmetric_lower_part(const LaurentPoly& f);

mpz_class evaluate_at_one(const LaurentPoly& f);

}  // namespace modrep
