#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modrep/partition.hpp"
#include "modrep/tableau.hpp"

namespace modrep {

/// Ladder decomposition of a p-restricted partition.
///
/// Ladder L_b is {[i,j] : j = b - (p-1)(i-1)}; only nonempty ladders are kept,
/// numbered 1..m by increasing b. The ladder tableau fills 1..n ladder by
/// ladder, top to bottom within each ladder.
struct LadderData {
    Partition shape;
    std::vector<std::vector<Node>> ladders;  // nodes sorted by increasing row
    std::vector<int> sizes;                  // m_k = |L_k|
    std::vector<int> residues;               // ι_k
    std::vector<int> limits;                 // n_0 = 0, n_k = m_1 + ... + m_k
    StandardTableau ladder_tableau;
    ResidueSequence ladder_residue_sequence;

    int count() const noexcept { return static_cast<int>(sizes.size()); }
    /// Entries n_{k-1}+1 .. n_k occupied by ladder k (1-based k).
    std::pair<int, int> interval(int k) const { return {limits.at(k - 1) + 1, limits.at(k)}; }
    /// |S_{lad}| = product of m_k!.
    std::uint64_t group_order() const;
};

/// Throws std::invalid_argument for non-p-restricted input.
LadderData ladder_decomposition(const Partition& lambda, const Prime& p);

/// True iff every ladder has fewer than p nodes.
bool validate_ladder_lengths(const Partition& lambda, const Prime& p);

/// T_{μλ}: tableaux of shape λ in the class of the ladder tableau of μ.
std::vector<StandardTableau> ladder_class_of_shape(const Partition& mu, const Partition& lambda,
                                                   const Prime& p,
                                                   const EnumerationLimits& limits = {});

/// Whether t = σ μ_lad for some σ in the ladder group of μ, i.e. each
/// ladder interval fills exactly the nodes of its ladder.
bool in_ladder_orbit(const LadderData& lad, const StandardTableau& t);

}  // namespace modrep
