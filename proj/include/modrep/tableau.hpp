#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "modrep/partition.hpp"

namespace modrep {

/// Residue sequence (r(1), ..., r(n)) over Z/p.
class ResidueSequence {
public:
    ResidueSequence(const Prime& p, std::vector<int> values);

    const Prime& prime() const noexcept { return p_; }
    const std::vector<int>& values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    int operator[](int k) const { return values_.at(k - 1); }  // 1-based

    /// The sequence with positions i-1 and i exchanged.
    ResidueSequence swapped(int i) const;

    std::string to_string() const;

    bool operator==(const ResidueSequence& o) const noexcept {
        return p_.value() == o.p_.value() && values_ == o.values_;
    }
    std::strong_ordering operator<=>(const ResidueSequence& o) const noexcept {
        if (auto c = p_.value() <=> o.p_.value(); c != 0) return c;
        return values_ <=> o.values_;
    }

private:
    Prime p_;
    std::vector<int> values_;
};

/// Arbitrary filling of a Young diagram by 1..n (row-major), possibly non-standard.
struct Tableau {
    std::vector<std::vector<int>> rows;

    bool is_standard() const;
    bool operator==(const Tableau&) const = default;
};

/// Standard tableau. Stored as the row index of each entry, which together
/// with standardness determines the filling. Ordering is lexicographic on that
/// entry-position sequence, so t^λ is the least tableau of its shape.
class StandardTableau {
public:
    /// Throws std::invalid_argument if `rows` is not a standard filling.
    static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);
    /// Builds from the (1-based) row of each entry 1..n; throws if not standard.
    static StandardTableau from_row_sequence(std::vector<int> row_of);
    /// t^λ: 1..n filled along the rows.
    static StandardTableau row_reading(const Partition& shape);

    const Partition& shape() const noexcept { return shape_; }
    int size() const noexcept { return static_cast<int>(row_of_.size()); }
    int row(int k) const { return row_of_.at(k - 1); }
    int col(int k) const { return col_of_.at(k - 1); }
    Node node(int k) const { return {row(k), col(k)}; }
    int content(int k) const { return col(k) - row(k); }
    const std::vector<int>& row_sequence() const noexcept { return row_of_; }

    std::vector<std::vector<int>> rows() const;
    Tableau as_tableau() const { return Tableau{rows()}; }

    /// σ_i t for σ_i = (i-1, i), if standard.
    std::optional<StandardTableau> swap(int i) const;

    std::string to_string() const;  // "[[1,2],[3,5],[4]]"

    bool operator==(const StandardTableau& o) const noexcept { return row_of_ == o.row_of_; }
    std::strong_ordering operator<=>(const StandardTableau& o) const noexcept {
        return row_of_ <=> o.row_of_;
    }

private:
    StandardTableau(Partition shape, std::vector<int> row_of, std::vector<int> col_of)
        : shape_(std::move(shape)), row_of_(std::move(row_of)), col_of_(std::move(col_of)) {}

    Partition shape_;
    std::vector<int> row_of_;
    std::vector<int> col_of_;
};

/// All standard λ-tableaux in the deterministic tableau order.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

int content(const StandardTableau& t, int k);
ResidueSequence residue_sequence(const StandardTableau& t, const Prime& p);

/// Options shared by the enumeration routines.
struct EnumerationLimits {
    int max_n = 40;
    bool allow_large = false;
};

/// All standard tableaux (any shape) with residue sequence `seq`, built by
/// adding addable i_k-nodes step by step. Sorted in tableau order.
std::vector<StandardTableau> tableau_class(const ResidueSequence& seq,
                                           const EnumerationLimits& limits = {});

/// As tableau_class, keeping only tableaux of shape `shape`.
std::vector<StandardTableau> tableau_class_of_shape(const ResidueSequence& seq,
                                                    const Partition& shape,
                                                    const EnumerationLimits& limits = {});

/// A permutation of {1..n} in one-line form together with a reduced word.
/// word = [i_1, ..., i_k] denotes the product σ_{i_1} σ_{i_2} ... σ_{i_k}
/// (so σ_{i_k} acts first), with σ_i = (i-1, i).
struct PermutationWord {
    std::vector<int> one_line;
    std::vector<int> word;
};

enum class WordStrategy { leftmost_descent, rightmost_descent };

/// One-line form of g with g t^λ = t under place permutation.
std::vector<int> d_permutation(const StandardTableau& t);

/// d(t) with a reduced word obtained by adjacent-transposition sorting.
PermutationWord d_reduced_word(const StandardTableau& t,
                               WordStrategy strategy = WordStrategy::leftmost_descent);

/// Reduced word for an arbitrary permutation (one-line, values 1..n).
std::vector<int> reduced_word(const std::vector<int>& one_line,
                              WordStrategy strategy = WordStrategy::leftmost_descent);

/// Composes the word back into one-line form.
std::vector<int> word_to_permutation(const std::vector<int>& word, int n);

int inversion_count(const std::vector<int>& one_line);

/// Replaces every entry k by g(k) at the same node.
Tableau place_permute(const std::vector<int>& g, const Tableau& t);

}  // namespace modrep
