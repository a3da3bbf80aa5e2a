#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modrep {

/// Odd prime characteristic. Construction rejects p < 3 and composites.
class Prime {
public:
    explicit Prime(int p);
    int value() const noexcept { return p_; }
    operator int() const noexcept { return p_; }

    /// Reduces an arbitrary integer into {0, ..., p-1}.
    int residue(std::int64_t x) const noexcept {
        std::int64_t r = x % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }

private:
    int p_;
};

bool is_prime(int p);

/// A box of a Young diagram, 1-based matrix coordinates.
struct Node {
    int row = 1;
    int col = 1;

    int content() const noexcept { return col - row; }
    int residue(const Prime& p) const noexcept { return p.residue(col - row); }

    auto operator<=>(const Node&) const = default;
};

/// Weakly decreasing sequence of positive integers. The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Length of row i (1-based); zero past the last row.
    int row(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    /// Length of column j (1-based).
    int column(int j) const noexcept;
    bool contains(const Node& x) const noexcept {
        return x.row >= 1 && x.col >= 1 && x.col <= row(x.row);
    }

    Partition with_node(const Node& x) const;
    Partition without_node(const Node& x) const;

    /// Nodes in row-reading order.
    std::vector<Node> nodes() const;

    /// "6,5,3,1"; the empty partition prints as "".
    std::string to_string() const;
    /// Accepts "3,2", "2,1^3", "[3,2]", "" and "[]".
    static Partition parse(const std::string& text);

    bool operator==(const Partition& o) const noexcept { return parts_ == o.parts_; }
    /// Plain lexicographic comparison of parts (used for containers only).
    std::strong_ordering operator<=>(const Partition& o) const noexcept {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

class SizeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_p_restricted(const Partition& lambda, const Prime& p);

/// All partitions of n, most dominant (lexicographically largest) first.
std::vector<Partition> partitions_of(int n);

/// p-restricted partitions of n in the canonical total order.
std::vector<Partition> restricted_partitions(int n, const Prime& p);

enum class Dominance { less, equal, greater, incomparable };

/// Compares partial sums; throws SizeMismatch if |lambda| != |mu|.
Dominance dominance_compare(const Partition& lambda, const Partition& mu);

/// lambda ⊵ mu.
bool dominates(const Partition& lambda, const Partition& mu);

enum class TieBreak { lex_descending, lex_ascending };

/// Strict total order refining dominance: `less` means lambda comes first
/// (lambda is "more dominant"). Incomparable pairs are broken
/// lexicographically, larger first. Throws SizeMismatch.
std::strong_ordering total_order(const Partition& lambda, const Partition& mu);

/// Sorts same-size partitions into a linear extension of dominance
/// (most dominant first). `lex_descending` reproduces total_order;
/// `lex_ascending` prefers the lexicographically smaller of the currently
/// maximal elements and gives a different but equally valid extension.
std::vector<Partition> sort_by_dominance(std::vector<Partition> parts,
                                         TieBreak tie = TieBreak::lex_descending);

/// Addable nodes of lambda with residue i, ordered by increasing row.
std::vector<Node> addable_nodes(const Partition& lambda, int i, const Prime& p);
/// Removable nodes of mu with residue i, ordered by increasing row.
std::vector<Node> removable_nodes(const Partition& mu, int i, const Prime& p);

std::vector<Node> addable_nodes(const Partition& lambda);
std::vector<Node> removable_nodes(const Partition& mu);

/// hooks[i-1][j-1] = arm + leg + 1 for node [i,j].
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

/// Number of standard tableaux, n! / (product of hook lengths).
std::uint64_t hook_formula_count(const Partition& lambda);

}  // namespace modrep
