#include "modrep/seminormal.hpp"

#include <stdexcept>

namespace modrep {

namespace {

Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

bool is_p_integral(const Rational& x, const Prime& p) {
    return mpz_fdiv_ui(x.get_den_mpz_t(), static_cast<unsigned long>(p.value())) != 0;
}

SeminormalVector SeminormalVector::basis(const StandardTableau& t) {
    SeminormalVector v(t.shape());
    v.coeffs_.emplace(t, Rational(1));
    return v;
}

Rational SeminormalVector::coeff(const StandardTableau& t) const {
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SeminormalVector::add_term(const StandardTableau& t, const Rational& c) {
    if (t.shape() != shape_) throw SizeMismatch("tableau shape differs from vector shape");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SeminormalVector& SeminormalVector::operator+=(const SeminormalVector& o) {
    if (o.shape_ != shape_) throw SizeMismatch("adding seminormal vectors of different shapes");
    for (const auto& [t, c] : o.coeffs_) add_term(t, c);
    return *this;
}

SeminormalVector& SeminormalVector::operator-=(const SeminormalVector& o) {
    if (o.shape_ != shape_) throw SizeMismatch("subtracting seminormal vectors of different shapes");
    for (const auto& [t, c] : o.coeffs_) add_term(t, -c);
    return *this;
}

SeminormalVector& SeminormalVector::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [t, x] : coeffs_) x *= c;
    return *this;
}

Rational gamma(const StandardTableau& t) {
    const int n = t.size();
    // Row lengths of the subtableau holding 1..i, grown one entry at a time.
    std::vector<int> rows;
    Rational g = 1;
    for (int i = 1; i <= n; ++i) {
        const int r = t.row(i);
        if (r > static_cast<int>(rows.size())) rows.push_back(0);
        ++rows[r - 1];
        if (i == 1) continue;
        for (int j = 1; j <= rows[r - 1]; ++j) {
            int leg = 0;
            for (std::size_t below = r; below < rows.size() && rows[below] >= j; ++below) ++leg;
            const int hook = (rows[r - 1] - j) + leg + 1;
            if (hook > 1) g *= frac(hook, hook - 1);
        }
    }
    return g;
}

SeminormalVector sigma_action(int i, const SeminormalVector& v) {
    SeminormalVector out(v.shape());
    for (const auto& [s, c] : v.coeffs()) {
        if (i < 2 || i > s.size()) throw std::out_of_range("generator index out of range");
        const int h = radial_distance(s, i);
        if (h == -1) {
            out.add_term(s, c);
        } else if (h == 1) {
            out.add_term(s, -c);
        } else {
            const StandardTableau t = *s.swap(i);
            out.add_term(s, -c / h);
            if (h > 1)
                out.add_term(t, c);
            else
                out.add_term(t, c * frac(h * h - 1, h * h));
        }
    }
    return out;
}

SeminormalVector jm_action(int k, const SeminormalVector& v) {
    SeminormalVector out(v.shape());
    for (const auto& [t, c] : v.coeffs()) {
        if (k < 1 || k > t.size()) throw std::out_of_range("Jucys-Murphy index out of range");
        if (k == 1) continue;
        out.add_term(t, c * t.content(k));
    }
    return out;
}

SeminormalVector phi_action(int i, const SeminormalVector& v, const Prime& p) {
    SeminormalVector out(v.shape());
    for (const auto& [s, c] : v.coeffs()) {
        if (i < 2 || i > s.size()) throw std::out_of_range("generator index out of range");
        const int h = radial_distance(s, i);
        if (h == 1 || h == -1) continue;
        const StandardTableau t = *s.swap(i);
        const bool singular = p.residue(h) == 0;
        if (singular) out.add_term(s, c * frac(h - 1, h));
        if (h > 1)
            out.add_term(t, c);
        else
            out.add_term(t, c * frac(h * h - 1, h * h));
    }
    return out;
}

Rational inner_product(const SeminormalVector& u, const SeminormalVector& v) {
    if (u.shape() != v.shape()) throw SizeMismatch("inner product of vectors of different shapes");
    Rational sum = 0;
    const auto& small = u.term_count() <= v.term_count() ? u : v;
    const auto& large = u.term_count() <= v.term_count() ? v : u;
    for (const auto& [t, c] : small.coeffs()) {
        auto it = large.coeffs().find(t);
        if (it != large.coeffs().end()) sum += c * it->second * gamma(t);
    }
    return sum;
}

SeminormalVector class_project(const ResidueSequence& seq, const SeminormalVector& v) {
    SeminormalVector out(v.shape());
    for (const auto& [t, c] : v.coeffs())
        if (t.size() == seq.size() && residue_sequence(t, seq.prime()) == seq) out.add_term(t, c);
    return out;
}

}  // namespace modrep
