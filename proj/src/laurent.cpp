#include "modrep/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace modrep {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) coeffs_.emplace(0, mpz_class(c));
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& coeff) {
    LaurentPoly f;
    f.set(exponent, coeff);
    return f;
}

mpz_class LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::set(int exponent, const mpz_class& c) {
    if (c == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = c;
}

void LaurentPoly::add_term(int exponent, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

int LaurentPoly::min_degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
    return r;
}

mpz_class LaurentPoly::at_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

bool LaurentPoly::in_q_positive() const { return coeffs_.empty() || coeffs_.begin()->first > 0; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dtop = divisor.max_degree();
    const int dbottom = divisor.min_degree();
    const mpz_class& lead = divisor.coeffs_.rbegin()->second;
    while (!rem.is_zero()) {
        const int top = rem.max_degree();
        if (top - dtop < rem.min_degree() - dbottom)
            throw std::domain_error("inexact Laurent polynomial division");
        const mpz_class& c = rem.coeffs_.rbegin()->second;
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("inexact Laurent polynomial division");
        mpz_class qc = c / lead;
        const int qe = top - dtop;
        quot.add_term(qe, qc);
        for (const auto& [e, dc] : divisor.coeffs_) rem.add_term(qe + e, -qc * dc);
    }
    return quot;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentPoly gaussian(int k) {
    if (k < 0) return -gaussian(-k);
    LaurentPoly r;
    for (int e = -(k - 1); e <= k - 1; e += 2) r.add_term(e, 1);
    return r;
}

LaurentPoly gaussian_factorial(int k) {
    if (k < 0) throw std::domain_error("factorial of a negative integer");
    LaurentPoly r(1);
    for (int j = 2; j <= k; ++j) r *= gaussian(j);
    return r;
}

LaurentPoly bar_symmetric_lower_part(const LaurentPoly& f) {
    LaurentPoly r;
    for (const auto& [e, c] : f.coeffs()) {
        if (e > 0) break;
        r.add_term(e, c);
        if (e < 0) r.add_term(-e, c);
    }
    return r;
}

mpz_class evaluate_at_one(const LaurentPoly& f) { return f.at_one(); }

}  // namespace modrep
