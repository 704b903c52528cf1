#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "c4free/indexed_set.hpp"
#include "c4free/rng.hpp"

namespace c4free {

/// r-uniform hypergraph on vertices 0..N-1. Edges are ascending r-sets.
struct Hypergraph {
  std::uint32_t N = 0;
  std::uint32_t r = 0;
  std::vector<std::vector<std::uint32_t>> edges;

  /// Throws std::invalid_argument on wrong arity, out-of-range or repeated
  /// vertices, or duplicate edges.
  void validate() const;
};

/// The hypergraph of K_{2,2} copies in K_{n,n}: one vertex per pair
/// (id = x*n + y), one 4-edge per quadruple {x,x'} x {y,y'}. It is
/// 4-uniform and (n-1)^2-regular on n^2 vertices with C(n,2)^2 edges.
Hypergraph build_k22_hypergraph(std::uint32_t n);

/// Exact set-degree and codegree extremes, by enumeration. Intended for
/// hypergraphs small enough to enumerate (the generic engine is an oracle).
struct DegreeProfile {
  std::uint32_t N = 0;
  std::uint32_t r = 0;
  std::uint64_t d_min = 0;
  std::uint64_t d_max = 0;
  std::map<std::uint32_t, std::uint64_t> delta;  // l -> Delta_l, l = 2..r-1
  std::map<std::uint32_t, std::uint64_t> gamma;  // b -> Gamma_b, b = r-1
};

DegreeProfile degree_profile(const Hypergraph& h);

/// Per-hypothesis evaluation of the regularity conditions the independent
/// process needs: D-regularity, D > N^eps, Delta_l < D^{(r-l)/(r-1)-eps},
/// Gamma_{r-1} < D^{1-eps}. Failures are report entries, not errors.
/// Irregular inputs are evaluated with D = d_max.
struct BbConditionReport {
  bool regular = false;
  bool d_exceeds_n_eps = false;
  std::map<std::uint32_t, bool> delta_ok;
  bool gamma_ok = false;
  double d = 0;
  double n_eps = 0;
  std::map<std::uint32_t, double> delta_bound;
  double gamma_bound = 0;

  bool all_ok() const;
};

BbConditionReport check_bb_conditions(const DegreeProfile& p, double eps);

/// Random greedy independent set process on a generic hypergraph.
///
/// Selecting a live vertex v removes v from every edge containing it,
/// deletes v from the live set, and kills every vertex left alone in a
/// singleton edge (edges touching a dead vertex are dropped). Deaths are
/// processed through a work queue within the step, then applied to the
/// live pool in ascending id order — the same ordering contract as
/// ProcessEngine, which makes the two engines couplable step by step.
class GreedyEngine {
 public:
  explicit GreedyEngine(const Hypergraph& h);

  /// Selects the live vertex at the given pool index.
  std::uint32_t step_at(std::size_t live_index);

  std::size_t live_count() const { return live_.size(); }
  bool terminated() const { return live_.empty(); }
  const std::vector<std::uint32_t>& independent_set() const { return selected_; }
  const IndexedSet& live_pool() const { return live_; }
  const std::vector<std::uint32_t>& last_deaths() const { return death_batch_; }
  bool is_selected(std::uint32_t v) const { return selected_flag_[v]; }
  bool is_dead(std::uint32_t v) const { return dead_[v]; }

 private:
  std::uint32_t n_vertices_;
  std::vector<std::vector<std::uint32_t>> edges_;      // shrinking vertex lists
  std::vector<bool> edge_alive_;
  std::vector<std::vector<std::uint32_t>> incidence_;  // vertex -> edge ids
  IndexedSet live_;
  std::vector<std::uint8_t> selected_flag_;
  std::vector<std::uint8_t> dead_;
  std::vector<std::uint32_t> selected_;
  std::vector<std::uint32_t> death_batch_;
};

struct GreedyResult {
  std::vector<std::uint32_t> independent_set;
  std::vector<std::size_t> live_after;  // live count after each selection
  double theory_scale = 0;              // N * (ln N / D)^{1/(r-1)}, D = max degree
};

/// Runs the greedy process to termination with uniform live-vertex choices.
GreedyResult greedy_independent_run(const Hypergraph& h, std::uint64_t seed);

/// Drives ProcessEngine on K_{n,n} and GreedyEngine on the K_{2,2}
/// hypergraph from one shared uniform index stream and compares the
/// selected sequences.
struct EquivalenceResult {
  bool equal = false;
  std::uint64_t steps = 0;
  std::int64_t first_divergence = -1;  // step index, -1 if none
  std::string detail;
};

EquivalenceResult equivalence_check(std::uint32_t n, std::uint64_t seed, std::uint64_t max_steps = 0);

/// Text format: "N r E" header, then E lines of r ascending vertex indices.
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& in);

}  // namespace c4free
