#include "modrep/tableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace modrep {

ResidueSequence::ResidueSequence(const Prime& p, std::vector<int> values)
    : p_(p), values_(std::move(values)) {
    for (int v : values_)
        if (v < 0 || v >= p_.value())
            throw std::invalid_argument("residue out of range for p = " + std::to_string(p_.value()));
}

ResidueSequence ResidueSequence::swapped(int i) const {
    auto v = values_;
    std::swap(v.at(i - 2), v.at(i - 1));
    return ResidueSequence(p_, std::move(v));
}

std::string ResidueSequence::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(values_[k]);
    }
    return s + ")";
}

bool Tableau::is_standard() const {
    int n = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) return false;
        if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
        n += static_cast<int>(rows[i].size());
    }
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
            if (j > 0 && rows[i][j - 1] >= v) return false;
            if (i > 0 && rows[i - 1][j] >= v) return false;
        }
    return true;
}

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows) {
    Tableau t{rows};
    if (!t.is_standard()) throw std::invalid_argument("tableau is not standard");
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    std::vector<int> row_of(n), col_of(n);
    std::vector<int> parts;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        parts.push_back(static_cast<int>(rows[i].size()));
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            row_of[rows[i][j] - 1] = static_cast<int>(i) + 1;
            col_of[rows[i][j] - 1] = static_cast<int>(j) + 1;
        }
    }
    return StandardTableau(Partition(std::move(parts)), std::move(row_of), std::move(col_of));
}

StandardTableau StandardTableau::from_row_sequence(std::vector<int> row_of) {
    std::vector<int> lengths;
    std::vector<int> col_of(row_of.size());
    for (std::size_t k = 0; k < row_of.size(); ++k) {
        int r = row_of[k];
        if (r < 1 || r > static_cast<int>(lengths.size()) + 1)
            throw std::invalid_argument("row sequence is not a standard tableau");
        if (r == static_cast<int>(lengths.size()) + 1) lengths.push_back(0);
        if (r > 1 && lengths[r - 2] <= lengths[r - 1])
            throw std::invalid_argument("row sequence is not a standard tableau");
        col_of[k] = ++lengths[r - 1];
    }
    return StandardTableau(Partition(std::move(lengths)), std::move(row_of), std::move(col_of));
}

StandardTableau StandardTableau::row_reading(const Partition& shape) {
    std::vector<int> row_of;
    row_of.reserve(shape.size());
    for (int i = 1; i <= shape.length(); ++i) row_of.insert(row_of.end(), shape.row(i), i);
    return from_row_sequence(std::move(row_of));
}

std::vector<std::vector<int>> StandardTableau::rows() const {
    std::vector<std::vector<int>> r(shape_.length());
    for (int i = 1; i <= shape_.length(); ++i) r[i - 1].resize(shape_.row(i));
    for (int k = 1; k <= size(); ++k) r[row(k) - 1][col(k) - 1] = k;
    return r;
}

std::optional<StandardTableau> StandardTableau::swap(int i) const {
    if (i < 2 || i > size()) throw std::out_of_range("generator index out of range");
    // Adjacent in a row or a column exactly when the contents differ by one.
    if (std::abs(content(i - 1) - content(i)) == 1) return std::nullopt;
    auto r = row_of_;
    auto c = col_of_;
    std::swap(r[i - 2], r[i - 1]);
    std::swap(c[i - 2], c[i - 1]);
    return StandardTableau(shape_, std::move(r), std::move(c));
}

std::string StandardTableau::to_string() const {
    std::ostringstream os;
    os << '[';
    auto rs = rows();
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < rs[i].size(); ++j) os << (j ? "," : "") << rs[i][j];
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
    std::vector<StandardTableau> out;
    std::vector<int> row_of;
    std::vector<int> filled(lambda.length() + 1, 0);
    // Choosing the smallest admissible row first yields lexicographic order.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(row_of.size()) == lambda.size()) {
            out.push_back(StandardTableau::from_row_sequence(row_of));
            return;
        }
        for (int i = 1; i <= lambda.length(); ++i) {
            if (filled[i] < lambda.row(i) && (i == 1 || filled[i - 1] > filled[i])) {
                ++filled[i];
                row_of.push_back(i);
                self(self);
                row_of.pop_back();
                --filled[i];
            }
        }
    };
    rec(rec);
    return out;
}

int content(const StandardTableau& t, int k) {
    if (k < 1 || k > t.size()) throw std::out_of_range("entry out of range");
    return t.content(k);
}

ResidueSequence residue_sequence(const StandardTableau& t, const Prime& p) {
    std::vector<int> v(t.size());
    for (int k = 1; k <= t.size(); ++k) v[k - 1] = p.residue(t.content(k));
    return ResidueSequence(p, std::move(v));
}

namespace {

std::vector<StandardTableau> enumerate_class(const ResidueSequence& seq,
                                             const std::optional<Partition>& shape,
                                             const EnumerationLimits& limits) {
    const int n = seq.size();
    if (n > limits.max_n && !limits.allow_large)
        throw std::length_error("tableau class enumeration for n = " + std::to_string(n) +
                                " exceeds the limit of " + std::to_string(limits.max_n));
    if (shape && shape->size() != n) return {};
    const Prime& p = seq.prime();

    // viable[(k, λ)]: λ ⊢ k can be extended by nodes of residue seq[k+1..n].
    std::map<std::pair<int, std::vector<int>>, bool> viable;
    auto can_finish = [&](auto&& self, const Partition& lam) -> bool {
        int k = lam.size();
        if (k == n) return !shape || lam == *shape;
        auto key = std::make_pair(k, lam.parts());
        if (auto it = viable.find(key); it != viable.end()) return it->second;
        bool ok = false;
        for (const auto& x : addable_nodes(lam, seq[k + 1], p)) {
            if (shape && !shape->contains(x)) continue;
            if (self(self, lam.with_node(x))) {
                ok = true;
                break;
            }
        }
        viable.emplace(std::move(key), ok);
        return ok;
    };

    std::vector<StandardTableau> out;
    std::vector<int> row_of;
    auto walk = [&](auto&& self, const Partition& lam) -> void {
        int k = lam.size();
        if (k == n) {
            out.push_back(StandardTableau::from_row_sequence(row_of));
            return;
        }
        for (const auto& x : addable_nodes(lam, seq[k + 1], p)) {
            if (shape && !shape->contains(x)) continue;
            Partition next = lam.with_node(x);
            if (!can_finish(can_finish, next)) continue;
            row_of.push_back(x.row);
            self(self, next);
            row_of.pop_back();
        }
    };
    if (can_finish(can_finish, Partition())) walk(walk, Partition());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<StandardTableau> tableau_class(const ResidueSequence& seq,
                                           const EnumerationLimits& limits) {
    return enumerate_class(seq, std::nullopt, limits);
}

std::vector<StandardTableau> tableau_class_of_shape(const ResidueSequence& seq,
                                                    const Partition& shape,
                                                    const EnumerationLimits& limits) {
    return enumerate_class(seq, shape, limits);
}

std::vector<int> d_permutation(const StandardTableau& t) {
    std::vector<int> g;
    g.reserve(t.size());
    for (const auto& r : t.rows()) g.insert(g.end(), r.begin(), r.end());
    return g;
}

std::vector<int> reduced_word(const std::vector<int>& one_line, WordStrategy strategy) {
    const int n = static_cast<int>(one_line.size());
    // Sorting g^{-1} by position swaps a ← a·σ_j gives g = σ_{j_1} σ_{j_2} ...
    std::vector<int> a(n);
    for (int k = 0; k < n; ++k) a[one_line[k] - 1] = k + 1;
    std::vector<int> word;
    for (;;) {
        int j = -1;
        if (strategy == WordStrategy::leftmost_descent) {
            for (int k = 1; k < n && j < 0; ++k)
                if (a[k - 1] > a[k]) j = k;
        } else {
            for (int k = n - 1; k >= 1 && j < 0; --k)
                if (a[k - 1] > a[k]) j = k;
        }
        if (j < 0) break;
        std::swap(a[j - 1], a[j]);
        word.push_back(j + 1);
    }
    return word;
}

PermutationWord d_reduced_word(const StandardTableau& t, WordStrategy strategy) {
    PermutationWord w;
    w.one_line = d_permutation(t);
    w.word = reduced_word(w.one_line, strategy);
    return w;
}

std::vector<int> word_to_permutation(const std::vector<int>& word, int n) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 1);
    // g ← g ∘ σ_i for i in order, i.e. swap positions i-1, i.
    for (int i : word) {
        if (i < 2 || i > n) throw std::out_of_range("generator index out of range");
        std::swap(g[i - 2], g[i - 1]);
    }
    return g;
}

int inversion_count(const std::vector<int>& one_line) {
    int inv = 0;
    for (std::size_t a = 0; a < one_line.size(); ++a)
        for (std::size_t b = a + 1; b < one_line.size(); ++b)
            if (one_line[a] > one_line[b]) ++inv;
    return inv;
}

Tableau place_permute(const std::vector<int>& g, const Tableau& t) {
    Tableau out = t;
    for (auto& r : out.rows)
        for (auto& v : r) {
            if (v < 1 || v > static_cast<int>(g.size()))
                throw std::out_of_range("permutation too short for tableau");
            v = g[v - 1];
        }
    return out;
}

}  // namespace modrep
