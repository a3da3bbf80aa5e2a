#pragma once

#include <cstdint>
#include <vector>

#include "modrep/fock.hpp"
#include "modrep/ladder.hpp"
#include "modrep/seminormal.hpp"

namespace modrep {

using RationalMatrix = Matrix<Rational>;
using ModpMatrix = Matrix<int>;

/// Gram matrix of the symmetrized ladder-class eigenspace of S(τ) and its p-rank.
struct GramReport {
    Partition mu;
    Partition tau;
    int p = 3;
    int basis_size_before_symmetrization = 0;
    int basis_size = 0;
    RationalMatrix gram;
    ModpMatrix gram_mod_p;
    int rank = 0;
};

class LadderLengthError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// φ_{i_1} ... φ_{i_k} ξ_{t^τ} for the reduced word [i_1..i_k] of d(s), one
/// vector per s ∈ T_{μτ} in tableau order.
std::vector<SeminormalVector> phi_chain_basis(const Partition& mu, const Partition& tau, const Prime& p,
                                              WordStrategy strategy = WordStrategy::leftmost_descent,
                                              const EnumerationLimits& limits = {});

/// Same, for an already computed T_{μτ}.
std::vector<SeminormalVector> phi_chain_basis(const Partition& tau,
                                              const std::vector<StandardTableau>& t_mu_tau,
                                              const Prime& p,
                                              WordStrategy strategy = WordStrategy::leftmost_descent);

/// Applies Π_k (1/|L_k|!) Σ_{σ ∈ S_{L_k}} σ to every vector (without selection).
std::vector<SeminormalVector> ladder_average(const LadderData& lad,
                                             const std::vector<SeminormalVector>& basis);

/// Indices of a maximal Q-linearly independent subset, chosen greedily in input order.
std::vector<std::size_t> independent_subset(const std::vector<SeminormalVector>& vectors);

/// Symmetrizes over the ladder group of μ and keeps a maximal independent subset.
/// Throws LadderLengthError if some ladder of μ has p or more nodes.
std::vector<SeminormalVector> ladder_symmetrize(const Partition& mu,
                                                const std::vector<SeminormalVector>& basis,
                                                const Prime& p);

/// G[a][b] = ⟨basis[a], basis[b]⟩.
RationalMatrix gram_matrix(const std::vector<SeminormalVector>& basis);

struct ModpRank {
    ModpMatrix reduced;
    int rank = 0;
};

/// Reduces a p-integral rational matrix mod p and takes its rank over F_p.
/// Throws std::domain_error on a non-p-integral entry.
ModpRank modp_rank(const RationalMatrix& g, const Prime& p);

/// Rank of an F_p matrix (entries already in 0..p-1).
int rank_mod_p(ModpMatrix m, const Prime& p);

/// Full pipeline for one pair (μ, τ).
GramReport gram_report(const Partition& mu, const Partition& tau, const Prime& p,
                       WordStrategy strategy = WordStrategy::leftmost_descent,
                       const EnumerationLimits& limits = {});

/// Same, reusing an already enumerated T_{μτ}.
GramReport gram_report(const LadderData& lad, const Partition& tau,
                       const std::vector<StandardTableau>& t_mu_tau, const Prime& p,
                       WordStrategy strategy = WordStrategy::leftmost_descent);

/// x_s = d(s) ξ_{t^τ} for every s ∈ Std(τ) in tableau order, each obtained
/// from a shorter one by a single σ_i. These span the integral lattice of S(τ).
std::vector<SeminormalVector> integral_basis(const Partition& tau);

/// p-rank of the form on the tableau-class eigenspace e(seq) S(τ), computed
/// from the class projections of a spanning set of the integral lattice.
int class_form_rank(const std::vector<SeminormalVector>& lattice_span, const ResidueSequence& seq,
                    const Prime& p);

/// dim ẽ_μ D(τ) as class_form_rank(ladder sequence) / Π_k |L_k|!. Needs no
/// symmetrizer, so it also applies when some ladder has p or more nodes.
/// Throws std::logic_error if the division is inexact.
int divided_power_dim(const LadderData& lad, const std::vector<SeminormalVector>& lattice_span,
                      const Prime& p);

/// dim ẽ_μ D(τ), the p-rank of the form on ẽ_μ S(τ).
int dim_e_tilde_D(const Partition& mu, const Partition& tau, const Prime& p,
                  WordStrategy strategy = WordStrategy::leftmost_descent,
                  const EnumerationLimits& limits = {});

}  // namespace modrep
