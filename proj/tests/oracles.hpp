// Brute-force oracles for the test suites. Everything here recomputes from
// first principles, independent of the incremental implementation paths it
// checks.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "c4free/bigraph.hpp"
#include "c4free/rng.hpp"

namespace oracles {

using c4free::BipartiteGraph;
using c4free::Pair;

/// Number of length-3 paths u - y' - x' - v between X-vertex u and
/// Y-vertex v (four distinct vertices).
inline std::uint64_t count_paths3(const BipartiteGraph& g, std::uint32_t u, std::uint32_t v) {
  std::uint64_t count = 0;
  for (std::uint32_t yp : g.neighbors_x(u)) {
    if (yp == v) continue;
    for (std::uint32_t xp : g.neighbors_y(yp)) {
      if (xp == u) continue;
      if (g.has_edge({xp, v})) ++count;
    }
  }
  return count;
}

/// K_{2,2}-freeness by scanning all (x, x', y, y') quadruples.
inline bool brute_k22_free(const BipartiteGraph& g) {
  const std::uint32_t n = g.n();
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t xp = x + 1; xp < n; ++xp)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t yp = y + 1; yp < n; ++yp)
          if (g.has_edge({x, y}) && g.has_edge({x, yp}) && g.has_edge({xp, y}) && g.has_edge({xp, yp}))
            return false;
  return true;
}

/// Edge count of A x B by direct membership tests.
inline std::uint64_t brute_rect_edges(const BipartiteGraph& g, const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) {
  std::uint64_t count = 0;
  for (std::uint32_t x : a)
    for (std::uint32_t y : b)
      if (g.has_edge({x, y})) ++count;
  return count;
}

/// Exact bipartite independence number by enumerating every A ⊆ X: with
/// C(A) the common complement neighborhood, a balanced empty rectangle of
/// size min(|A|, |C(A)|) always exists inside (A, C(A)).
inline std::uint32_t brute_balanced_independence(const BipartiteGraph& g) {
  const std::uint32_t n = g.n();
  std::vector<std::uint64_t> comp(n, 0);
  const std::uint64_t full = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint64_t row = 0;
    for (std::uint32_t y : g.neighbors_x(x)) row |= 1ULL << y;
    comp[x] = full & ~row;
  }
  std::uint32_t best = 0;
  for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
    std::uint64_t cand = full;
    std::uint32_t size = 0;
    for (std::uint32_t x = 0; x < n; ++x)
      if ((mask >> x) & 1) {
        cand &= comp[x];
        ++size;
      }
    best = std::max(best, std::min(size, static_cast<std::uint32_t>(std::popcount(cand))));
  }
  return best;
}

/// Uniform random bipartite graph with edge probability p.
inline BipartiteGraph random_graph(std::uint32_t n, double p, std::uint64_t seed) {
  BipartiteGraph g(n);
  c4free::Rng rng(seed);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (rng.unit() < p) g.add_edge({x, y});
  return g;
}

inline BipartiteGraph perfect_matching(std::uint32_t n) {
  BipartiteGraph g(n);
  for (std::uint32_t i = 0; i < n; ++i) g.add_edge({i, i});
  return g;
}

inline BipartiteGraph complete_graph(std::uint32_t n) {
  BipartiteGraph g(n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) g.add_edge({x, y});
  return g;
}

}  // namespace oracles
