#pragma once

#include <cstdint>

#include "c4free/bigraph.hpp"

namespace c4free {

/// Exact bipartite independence number: the largest t with A ⊆ X, B ⊆ Y,
/// |A| = |B| = t and no edge in A × B. Branch and bound on the bipartite
/// complement (maximum balanced biclique): per-target decision searches
/// descending from a degree upper bound, branching on X-vertices in
/// descending complement-degree order, pruned by candidate counts and a
/// greedy matching bound. Throws std::invalid_argument when n exceeds
/// `limit` (use the heuristic there); `limit` itself is capped at 64.
std::uint32_t bip_independence_exact(const BipartiteGraph& g, std::uint32_t limit = 32);

/// Randomized lower bound on the bipartite independence number: greedy
/// balanced construction over random vertex orders plus 1-swap local
/// search, best over `restarts`.
std::uint32_t bip_independence_heuristic(const BipartiteGraph& g, std::uint32_t restarts,
                                         std::uint64_t seed);

}  // namespace c4free
