#include "c4free/independence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "c4free/rng.hpp"

namespace c4free {

namespace {

// Decision search: does the complement contain a balanced biclique of size
// t? `comp[x]` holds the complement neighborhood of x as an n-bit mask and
// `gadj[x]` the original neighborhood (for the matching bound). X-vertices
// are visited in `order`.
struct BicliqueSearch {
  const std::vector<std::uint64_t>& comp;
  const std::vector<std::uint64_t>& gadj;
  const std::vector<std::uint32_t>& order;
  std::uint32_t n;
  std::uint32_t target;

  bool feasible(std::size_t idx, std::uint32_t chosen, std::uint64_t cand_y) const {
    const std::uint32_t cand_count = static_cast<std::uint32_t>(std::popcount(cand_y));
    if (cand_count < target) return false;
    const std::uint32_t avail_x = static_cast<std::uint32_t>(order.size() - idx);
    const std::uint32_t need_x = target - chosen;
    if (avail_x < need_x) return false;

    // Any solution discards one endpoint of every original-graph matching
    // edge between the remaining X candidates and cand_y; a greedy matching
    // therefore bounds the discard budget from below.
    std::uint64_t free_y = cand_y;
    std::uint32_t matching = 0;
    for (std::size_t j = idx; j < order.size(); ++j) {
      const std::uint64_t hit = gadj[order[j]] & free_y;
      if (hit) {
        free_y &= ~(hit & (~hit + 1));  // drop lowest matched y
        ++matching;
      }
    }
    return matching <= (avail_x - need_x) + (cand_count - target);
  }

  bool search(std::size_t idx, std::uint32_t chosen, std::uint64_t cand_y) const {
    if (chosen == target) return true;
    if (!feasible(idx, chosen, cand_y)) return false;
    for (std::size_t j = idx; j < order.size(); ++j) {
      const std::uint64_t next = cand_y & comp[order[j]];
      if (std::popcount(next) < static_cast<int>(target)) continue;
      if (search(j + 1, chosen + 1, next)) return true;
    }
    return false;
  }
};

}  // namespace

std::uint32_t bip_independence_exact(const BipartiteGraph& g, std::uint32_t limit) {
  const std::uint32_t n = g.n();
  if (limit > 64) limit = 64;
  if (n > limit)
    throw std::invalid_argument(
        "bip_independence_exact: n exceeds the exact-search limit; use bip_independence_heuristic");

  const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  std::vector<std::uint64_t> gadj(n, 0), comp(n, 0), comp_y(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y : g.neighbors_x(x)) gadj[x] |= 1ULL << y;
    comp[x] = full & ~gadj[x];
  }
  for (std::uint32_t y = 0; y < n; ++y) {
    std::uint64_t row = 0;
    for (std::uint32_t x : g.neighbors_y(y)) row |= 1ULL << x;
    comp_y[y] = full & ~row;
  }

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::popcount(comp[a]) > std::popcount(comp[b]);
  });

  // Degree upper bound per side: a balanced biclique of size t needs t
  // vertices of complement degree >= t.
  auto degree_ub = [n](const std::vector<std::uint64_t>& rows) {
    std::vector<std::uint32_t> degs(n);
    for (std::uint32_t i = 0; i < n; ++i) degs[i] = static_cast<std::uint32_t>(std::popcount(rows[i]));
    std::sort(degs.rbegin(), degs.rend());
    std::uint32_t t = 0;
    while (t < n && degs[t] >= t + 1) ++t;
    return t;
  };
  const std::uint32_t ub = std::min(degree_ub(comp), degree_ub(comp_y));

  for (std::uint32_t t = ub; t >= 1; --t) {
    BicliqueSearch s{comp, gadj, order, n, t};
    if (s.search(0, 0, full)) return t;
  }
  return 0;
}

std::uint32_t bip_independence_heuristic(const BipartiteGraph& g, std::uint32_t restarts,
                                         std::uint64_t seed) {
  const std::uint32_t n = g.n();
  Rng rng(seed);

  std::vector<std::uint32_t> order_x(n), order_y(n);
  std::vector<std::uint32_t> conf_x(n), conf_y(n);  // neighbors inside the other side
  std::vector<std::uint8_t> in_a(n), in_b(n);
  std::vector<std::uint32_t> a, b;

  auto shuffle = [&](std::vector<std::uint32_t>& v) {
    std::iota(v.begin(), v.end(), 0u);
    for (std::uint32_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
  };

  auto add_a = [&](std::uint32_t x) {
    in_a[x] = 1;
    a.push_back(x);
    for (std::uint32_t y : g.neighbors_x(x)) ++conf_y[y];
  };
  auto add_b = [&](std::uint32_t y) {
    in_b[y] = 1;
    b.push_back(y);
    for (std::uint32_t x : g.neighbors_y(y)) ++conf_x[x];
  };

  std::uint32_t best = 0;
  for (std::uint32_t restart = 0; restart < restarts; ++restart) {
    shuffle(order_x);
    shuffle(order_y);
    std::fill(conf_x.begin(), conf_x.end(), 0u);
    std::fill(conf_y.begin(), conf_y.end(), 0u);
    std::fill(in_a.begin(), in_a.end(), 0);
    std::fill(in_b.begin(), in_b.end(), 0);
    a.clear();
    b.clear();

    // Balanced greedy pass. Conflict counts only grow while a side is being
    // filled, so a blocked vertex stays blocked and single pointers suffice.
    std::size_t px = 0, py = 0;
    for (;;) {
      const bool want_x = (a.size() <= b.size() && px < n) || py >= n;
      if (px >= n && py >= n) break;
      if (want_x && px < n) {
        const std::uint32_t x = order_x[px++];
        if (conf_x[x] == 0) add_a(x);
      } else if (py < n) {
        const std::uint32_t y = order_y[py++];
        if (conf_y[y] == 0) add_b(y);
      }
    }

    // 1-swap repair: when the short side is blocked only by single vertices
    // of the long side, trade one for one as long as the minimum grows.
    bool improved = true;
    while (improved) {
      improved = false;
      if (a.size() + 2 <= b.size()) {
        for (std::uint32_t x = 0; x < n && !improved; ++x) {
          if (in_a[x] || conf_x[x] != 1) continue;
          for (std::uint32_t y : g.neighbors_x(x)) {
            if (!in_b[y]) continue;
            in_b[y] = 0;
            b.erase(std::find(b.begin(), b.end(), y));
            for (std::uint32_t xx : g.neighbors_y(y)) --conf_x[xx];
            add_a(x);
            improved = true;
            break;
          }
        }
      } else if (b.size() + 2 <= a.size()) {
        for (std::uint32_t y = 0; y < n && !improved; ++y) {
          if (in_b[y] || conf_y[y] != 1) continue;
          for (std::uint32_t x : g.neighbors_y(y)) {
            if (!in_a[x]) continue;
            in_a[x] = 0;
            a.erase(std::find(a.begin(), a.end(), x));
            for (std::uint32_t yy : g.neighbors_x(x)) --conf_y[yy];
            add_b(y);
            improved = true;
            break;
          }
        }
      }
      // Free additions that the swaps may have unlocked.
      for (std::uint32_t x = 0; x < n; ++x)
        if (!in_a[x] && conf_x[x] == 0 && a.size() <= b.size()) {
          add_a(x);
          improved = true;
        }
      for (std::uint32_t y = 0; y < n; ++y)
        if (!in_b[y] && conf_y[y] == 0 && b.size() <= a.size()) {
          add_b(y);
          improved = true;
        }
    }

    best = std::max(best, static_cast<std::uint32_t>(std::min(a.size(), b.size())));
    if (best == n) break;
  }
  return best;
}

}  // namespace c4free
