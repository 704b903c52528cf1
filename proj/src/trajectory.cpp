#include "c4free/trajectory.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_set>

#include "c4free/analysis.hpp"

namespace c4free {

const char* const kTrajectoryCsvHeader = "step,t,open,open_pred,d2_mean,d2_pred,maxdeg,qI_min_ratio,aI_max,f_env";

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

double sample_d2_mean(const ProcessEngine& eng, std::uint32_t samples, Rng& rng) {
  const std::size_t open = eng.open_count();
  if (open == 0 || samples == 0) return std::numeric_limits<double>::quiet_NaN();
  std::uint64_t total = 0;
  std::size_t drawn = 0;
  if (samples >= open) {
    for (std::size_t i = 0; i < open; ++i) total += eng.d2_exact(eng.pair_of(eng.open_pool().at(i)));
    drawn = open;
  } else {
    std::unordered_set<std::size_t> picked;
    picked.reserve(samples * 2);
    while (picked.size() < samples) {
      const std::size_t i = rng.below(open);
      if (picked.insert(i).second) total += eng.d2_exact(eng.pair_of(eng.open_pool().at(i)));
    }
    drawn = samples;
  }
  return static_cast<double>(total) / static_cast<double>(drawn);
}

}  // namespace

RunResult run_instrumented(ProcessEngine& eng, StopRule stop, const InstrumentOptions& opt,
                           std::uint64_t instrument_seed) {
  const std::uint32_t n = eng.n();
  const std::uint64_t cadence =
      opt.cadence > 0 ? opt.cadence
                      : static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(n), 2.0 / 3.0)));

  Rng instr_rng(mix_seed(instrument_seed, 0xD25A11CEULL));
  RectangleTracker tracker(n, opt.rect_count, opt.eps, mix_seed(instrument_seed, 0x4EC7ULL));

  RunResult result;

  auto time_of = [&](std::uint64_t i) {
    // n = 1 is degenerate for the scaled clock; i/n^{4/3} = i keeps records
    // monotone there.
    return n >= 2 ? scaled_time(n, i) : static_cast<double>(i);
  };

  auto record = [&]() {
    const std::uint64_t i = eng.step_index();
    const double t = time_of(i);
    const PredictedCurves curves = predicted_curves(n, t, opt.eps);
    TrajectoryRecord rec;
    rec.step = i;
    rec.t = t;
    rec.open = eng.open_count();
    rec.open_pred = curves.open_pred;
    rec.d2_mean = sample_d2_mean(eng, opt.d2_samples, instr_rng);
    rec.d2_pred = curves.d2_pred;
    rec.maxdeg = eng.graph().max_degree();
    rec.qi_min_ratio = tracker.current_min_ratio(curves.q);
    rec.ai_max = tracker.max_ai();
    rec.f_env = curves.envelope;
    result.records.push_back(rec);
    if (t <= opt.t_cap && curves.open_pred > 0) {
      const double dev = std::abs(static_cast<double>(rec.open) / curves.open_pred - 1.0);
      result.max_open_dev = std::max(result.max_open_dev, dev);
    }
  };

  record();  // step 0: open = n^2 exactly matches the prediction

  for (;;) {
    if (stop.kind == StopRule::Kind::MaxSteps && eng.step_index() >= stop.max_steps) break;
    const auto out = eng.step();
    if (out.terminated) break;
    tracker.on_step(out.chosen, eng.last_closed(), predicted_curves(n, time_of(eng.step_index()), opt.eps).q);
    if (eng.step_index() % cadence == 0) record();
  }
  if (result.records.back().step != eng.step_index()) record();

  result.final_edges = eng.step_index();
  result.max_degree = eng.graph().max_degree();
  result.terminated = eng.terminated();
  result.rect_coverage = tracker.coverage();

  const double high_threshold = std::pow(static_cast<double>(n), 1.0 / 3.0 - 16.0 * std::pow(opt.eps, 3));
  for (const auto& rect : tracker.rectangles()) {
    RectangleReport rep;
    rep.alpha = tracker.alpha();
    rep.received_edge = rect.received_edge;
    rep.min_ratio = rect.min_ratio;
    rep.final_q_i = rect.q_i;
    rep.final_a_i = rect.a_i;
    rep.q_tilde = rect.q_tilde();
    rep.max_abs_delta = rect.max_abs_delta;
    rep.ai_bound = ai_reference_bound(n, opt.eps);
    // Diagnostic: vertices seeing many tracked-side neighbors in the final
    // graph (the proof-internal I^{(1)} counts).
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint64_t into_ix = 0;
      for (std::uint32_t x : eng.graph().neighbors_y(y)) into_ix += rect.mem_x[x];
      if (static_cast<double>(into_ix) >= high_threshold) ++rep.high_deg_x;
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint64_t into_iy = 0;
      for (std::uint32_t y : eng.graph().neighbors_x(x)) into_iy += rect.mem_y[y];
      if (static_cast<double>(into_iy) >= high_threshold) ++rep.high_deg_y;
    }
    result.rect_reports.push_back(rep);
  }
  return result;
}

std::string trajectory_csv(const std::vector<TrajectoryRecord>& records) {
  std::string out = kTrajectoryCsvHeader;
  out += "\n";
  for (const auto& r : records) {
    out += std::to_string(r.step);
    out += ",";
    out += fmt9(r.t);
    out += ",";
    out += std::to_string(r.open);
    out += ",";
    out += fmt9(r.open_pred);
    out += ",";
    out += fmt9(r.d2_mean);
    out += ",";
    out += fmt9(r.d2_pred);
    out += ",";
    out += std::to_string(r.maxdeg);
    out += ",";
    out += fmt9(r.qi_min_ratio);
    out += ",";
    out += fmt9(r.ai_max);
    out += ",";
    out += fmt9(r.f_env);
    out += "\n";
  }
  return out;
}

}  // namespace c4free
