#include "modrep/ladder.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace modrep {

std::uint64_t LadderData::group_order() const {
    std::uint64_t g = 1;
    for (int m : sizes)
        for (int k = 2; k <= m; ++k) g *= static_cast<std::uint64_t>(k);
    return g;
}

namespace {

int ladder_index(const Node& x, const Prime& p) { return x.col + (p.value() - 1) * (x.row - 1); }

}  // namespace

LadderData ladder_decomposition(const Partition& lambda, const Prime& p) {
    if (!is_p_restricted(lambda, p))
        throw std::invalid_argument("ladder decomposition needs a " + std::to_string(p.value()) +
                                    "-restricted partition, got (" + lambda.to_string() + ")");
    std::map<int, std::vector<Node>> by_b;
    for (const auto& x : lambda.nodes()) by_b[ladder_index(x, p)].push_back(x);

    const int n = lambda.size();
    std::vector<int> row_of(n);
    std::vector<std::vector<Node>> ladders;
    std::vector<int> sizes, residues, limits{0};
    int next = 1;
    for (auto& [b, nodes] : by_b) {
        std::sort(nodes.begin(), nodes.end());
        for (const auto& x : nodes) row_of[(next++) - 1] = x.row;
        sizes.push_back(static_cast<int>(nodes.size()));
        residues.push_back(nodes.front().residue(p));
        limits.push_back(limits.back() + sizes.back());
        ladders.push_back(std::move(nodes));
    }
    // Unbroken ladders make the ladder filling standard.
    auto tab = StandardTableau::from_row_sequence(std::move(row_of));
    auto seq = residue_sequence(tab, p);
    return LadderData{lambda, std::move(ladders), std::move(sizes), std::move(residues),
                      std::move(limits), std::move(tab), std::move(seq)};
}

bool validate_ladder_lengths(const Partition& lambda, const Prime& p) {
    auto lad = ladder_decomposition(lambda, p);
    return std::all_of(lad.sizes.begin(), lad.sizes.end(), [&](int m) { return m < p.value(); });
}

std::vector<StandardTableau> ladder_class_of_shape(const Partition& mu, const Partition& lambda,
                                                   const Prime& p, const EnumerationLimits& limits) {
    if (mu.size() != lambda.size()) throw SizeMismatch("|mu| != |lambda|");
    auto lad = ladder_decomposition(mu, p);
    return tableau_class_of_shape(lad.ladder_residue_sequence, lambda, limits);
}

bool in_ladder_orbit(const LadderData& lad, const StandardTableau& t) {
    if (t.shape() != lad.shape) return false;
    for (int k = 1; k <= lad.count(); ++k) {
        auto [lo, hi] = lad.interval(k);
        std::set<Node> placed;
        for (int e = lo; e <= hi; ++e) placed.insert(t.node(e));
        if (!std::equal(placed.begin(), placed.end(), lad.ladders[k - 1].begin(),
                        lad.ladders[k - 1].end()))
            return false;
    }
    return true;
}

}  // namespace modrep
