#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "c4free/bigraph.hpp"
#include "c4free/indexed_set.hpp"
#include "c4free/rng.hpp"

namespace c4free {

enum class PairState : std::uint8_t { Open, Closed, Chosen };

/// Stopping rule for a process run: natural completion (no open pair left)
/// or a fixed step budget.
struct StopRule {
  enum class Kind { Completion, MaxSteps };
  Kind kind = Kind::Completion;
  std::uint64_t max_steps = 0;

  static StopRule completion() { return {}; }
  static StopRule max_steps_of(std::uint64_t steps) { return {Kind::MaxSteps, steps}; }
};

/// Step budget floor(coeff * n^{4/3} * (ln n)^{1/3}); the analysis window of
/// the process. `coeff` defaults to 0.3.
std::uint64_t imax_steps(std::uint32_t n, double coeff = 0.3);

/// The bipartite K_{2,2}-free process on K_{n,n}.
///
/// Every pair (x, y) is Open, Closed, or Chosen. A chosen pair is an edge;
/// a closed pair is a non-edge whose endpoints are joined by a length-3
/// path, so adding it would complete a K_{2,2}. Each step samples uniformly
/// from the open pairs by index into an O(1) swap-remove pool.
///
/// The closure counter c(x, y) is the number of length-3 paths x-y'-x'-y in
/// the current graph; a pair closes when its counter first becomes positive.
/// Counters are maintained incrementally: adding an edge contributes new
/// paths in exactly three roles (first, middle, or last edge of the path).
///
/// Ordering contract shared with the generic hypergraph engine: the open
/// pool starts in lexicographic (x, y) order; the sampled pair is removed
/// at its sampled slot first, then the step's newly closed pairs are removed
/// in ascending id order.
class ProcessEngine {
 public:
  struct Step {
    bool terminated = false;
    Pair chosen{};
  };

  ProcessEngine(std::uint32_t n, std::uint64_t seed);

  /// Samples a uniform open pair and applies it. Returns terminated=true
  /// (and leaves the state final) when no open pair remains.
  Step step();

  /// Applies the open pair at the given pool index (coupling/replay entry).
  Pair step_at(std::size_t open_index);

  /// Applies a specific pair, which must currently be Open.
  void force(Pair p);

  /// Runs until the stop rule triggers. Returns the final edge count M.
  std::uint64_t run(StopRule stop);

  /// Pairs whose closure counter went 0 -> positive during the last applied
  /// step, in ascending id order.
  const std::vector<Pair>& last_closed() const { return last_closed_; }

  /// d2(e) for an open pair e = (u, v): the number of K_{2,2} copies through
  /// e with exactly two chosen pairs and one further open pair — the open
  /// pairs whose selection would close e. Neighbor-restricted enumeration.
  std::uint64_t d2_exact(Pair e) const;

  /// Same quantity by full (x', y') enumeration; the cross-check route.
  std::uint64_t d2_reference(Pair e) const;

  std::uint32_t n() const { return n_; }
  std::uint64_t step_index() const { return step_index_; }
  bool terminated() const { return open_.empty(); }
  std::size_t open_count() const { return open_.size(); }
  const BipartiteGraph& graph() const { return graph_; }
  const std::vector<Pair>& history() const { return history_; }
  const IndexedSet& open_pool() const { return open_; }

  PairState state_of(Pair p) const { return state_[id_of(p)]; }
  std::uint32_t closure_counter(Pair p) const { return counter_[id_of(p)]; }

  std::uint64_t seed() const { return seed_; }
  static const char* rng_algo() { return Rng::kAlgoId; }

  std::uint32_t id_of(Pair p) const { return p.x * n_ + p.y; }
  Pair pair_of(std::uint32_t id) const { return {id / n_, id % n_}; }

 private:
  void apply(std::uint32_t id);
  void apply_closures(std::uint32_t x, std::uint32_t y);
  void bump(std::uint32_t x, std::uint32_t y);

  std::uint32_t n_;
  std::uint64_t seed_;
  Rng rng_;
  BipartiteGraph graph_;
  std::vector<PairState> state_;
  std::vector<std::uint32_t> counter_;
  IndexedSet open_;
  std::vector<Pair> history_;
  std::vector<Pair> last_closed_;
  std::vector<std::uint32_t> closed_batch_;
  std::uint64_t step_index_ = 0;
};

}  // namespace c4free
