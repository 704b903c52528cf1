#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "c4free/process.hpp"
#include "c4free/trajectory.hpp"

#include <json.hpp>

namespace c4free {

/// Full configuration of a replicated experiment. Replication r runs on
/// seed mix_seed(seed, r), so runs are independent streams yet the whole
/// experiment is reproducible from (config, seed) alone.
struct RunConfig {
  std::uint32_t n = 64;
  std::uint64_t seed = 1;
  std::uint32_t reps = 1;
  StopRule::Kind stop = StopRule::Kind::Completion;
  double imax_eps = 0.3;  // step-budget coefficient for the imax stop mode
  double eps = 0.1;       // analysis exponent parameter
  std::uint32_t rects = 0;
  std::uint32_t d2_samples = 64;
  std::uint64_t cadence = 0;  // 0: every ceil(n^{2/3}) steps
  std::string out_dir;
  std::uint32_t exact_limit = 32;
  std::uint32_t beta_restarts = 200;
  std::uint32_t threads = 0;  // worker pool size; 0: hardware concurrency

  /// Throws std::invalid_argument on invalid combinations (usage errors).
  void validate() const;
};

struct RepOutcome {
  std::uint32_t rep = 0;
  std::uint64_t rep_seed = 0;
  std::uint64_t final_edges = 0;
  std::uint32_t max_degree = 0;
  std::uint32_t beta = 0;
  bool beta_exact = false;
  double rect_coverage = 0;  // NaN when rects == 0
  double max_open_dev = 0;
  bool terminated = false;
  std::vector<RectangleReport> rect_reports;
  std::string trajectory_csv_text;
  std::string graph_text;
};

struct RunOutputs {
  std::vector<RepOutcome> reps;
  nlohmann::ordered_json summary;
};

/// Runs all replications on a bounded worker pool and merges results in
/// replication order; outputs are byte-identical for a fixed (config, seed)
/// regardless of the pool size.
RunOutputs run_replications(const RunConfig& cfg);

/// Writes traj_r####.csv, graph_r####.txt, summary.json and plot.py under
/// cfg.out_dir.
void write_run_artifacts(const RunConfig& cfg, const RunOutputs& outputs);

struct SweepOutputs {
  nlohmann::ordered_json report;
};

/// Runs the experiment for every n in `n_list` (artifacts under
/// out_dir/n####/) and fits ln M and ln beta against ln n over the
/// per-replication points. `synthetic` replaces measured values with exact
/// power laws n^{4/3} and n^{2/3} to validate the fit plumbing end to end.
SweepOutputs run_sweep(const RunConfig& base, const std::vector<std::uint32_t>& n_list,
                       bool synthetic = false);

void write_sweep_artifacts(const RunConfig& base, const SweepOutputs& outputs);

/// Round-trips a double through "%.9g" so every float in JSON output
/// carries 9 significant digits.
double round9(double v);

}  // namespace c4free
