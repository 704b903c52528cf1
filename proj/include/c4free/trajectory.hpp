#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "c4free/process.hpp"
#include "c4free/rectangles.hpp"

namespace c4free {

/// One trajectory sample. `t` is the scaled time after `step` steps; the
/// *_pred columns are the deterministic targets at that time.
struct TrajectoryRecord {
  std::uint64_t step = 0;
  double t = 0;
  std::uint64_t open = 0;
  double open_pred = 0;
  double d2_mean = 0;  // NaN when no open pair was sampled
  double d2_pred = 0;
  std::uint32_t maxdeg = 0;
  double qi_min_ratio = 0;  // min over rectangles of q_I/(alpha^2 q); NaN when k=0
  double ai_max = 0;        // max over rectangles of A_I; NaN when k=0
  double f_env = 0;
};

struct InstrumentOptions {
  double eps = 0.1;
  std::uint32_t rect_count = 0;
  std::uint32_t d2_samples = 64;
  std::uint64_t cadence = 0;  // 0: every ceil(n^{2/3}) steps
  double t_cap = 1.5;         // window for the open-count deviation summary
};

struct RectangleReport {
  std::uint32_t alpha = 0;
  bool received_edge = false;
  double min_ratio = 0;
  std::uint64_t final_q_i = 0;
  std::uint64_t final_a_i = 0;
  std::uint64_t q_tilde = 0;
  std::uint64_t max_abs_delta = 0;
  double ai_bound = 0;           // n^{1+45 eps^3}
  std::uint64_t high_deg_x = 0;  // Y-vertices with many neighbors in I_X
  std::uint64_t high_deg_y = 0;  // X-vertices with many neighbors in I_Y
};

struct RunResult {
  std::vector<TrajectoryRecord> records;
  std::vector<RectangleReport> rect_reports;
  std::uint64_t final_edges = 0;
  std::uint32_t max_degree = 0;
  bool terminated = false;
  double rect_coverage = 0;   // NaN when k=0
  double max_open_dev = 0;    // max |open/open_pred - 1| over records with t <= t_cap
};

/// Steps `eng` under `stop`, recording at step 0, every cadence steps, and
/// the final step. Instrumentation randomness (d2 sampling, rectangle
/// placement) comes from `instrument_seed` and never touches the engine's
/// stream, so the trajectory of a seed is independent of these options.
RunResult run_instrumented(ProcessEngine& eng, StopRule stop, const InstrumentOptions& opt,
                           std::uint64_t instrument_seed);

/// Fixed-header CSV of the records; floats carry 9 significant digits.
extern const char* const kTrajectoryCsvHeader;
std::string trajectory_csv(const std::vector<TrajectoryRecord>& records);

/// "%.9g" formatting used for all floating-point text output.
std::string fmt9(double v);

}  // namespace c4free
