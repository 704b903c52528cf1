#include "c4free/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "c4free/analysis.hpp"
#include "c4free/independence.hpp"
#include "c4free/version.hpp"

namespace c4free {

namespace fs = std::filesystem;

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("config: n must be >= 1");
  if (reps < 1) throw std::invalid_argument("config: reps must be >= 1");
  if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("config: eps must lie in (0, 0.5]");
  if (imax_eps <= 0.0) throw std::invalid_argument("config: imax-eps must be positive");
  if (exact_limit > 64) throw std::invalid_argument("config: exact-limit must be <= 64");
}

double round9(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::strtod(buf, nullptr);
}

namespace {

nlohmann::ordered_json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  return round9(v);
}

RepOutcome run_one(const RunConfig& cfg, std::uint32_t rep) {
  RepOutcome out;
  out.rep = rep;
  out.rep_seed = mix_seed(cfg.seed, rep);

  ProcessEngine eng(cfg.n, out.rep_seed);
  const StopRule stop = cfg.stop == StopRule::Kind::Completion
                            ? StopRule::completion()
                            : StopRule::max_steps_of(imax_steps(cfg.n, cfg.imax_eps));

  InstrumentOptions opt;
  opt.eps = cfg.eps;
  opt.rect_count = cfg.rects;
  opt.d2_samples = cfg.d2_samples;
  opt.cadence = cfg.cadence;

  RunResult run = run_instrumented(eng, stop, opt, out.rep_seed);
  out.final_edges = run.final_edges;
  out.max_degree = run.max_degree;
  out.rect_coverage = run.rect_coverage;
  out.max_open_dev = run.max_open_dev;
  out.terminated = run.terminated;
  out.rect_reports = std::move(run.rect_reports);

  out.beta_exact = cfg.n <= cfg.exact_limit;
  out.beta = out.beta_exact
                 ? bip_independence_exact(eng.graph(), cfg.exact_limit)
                 : bip_independence_heuristic(eng.graph(), cfg.beta_restarts, mix_seed(out.rep_seed, 0xBE7AULL));

  out.trajectory_csv_text = trajectory_csv(run.records);

  char header[96];
  std::snprintf(header, sizeof(header), "seed=%llu algo=%s n=%u",
                static_cast<unsigned long long>(out.rep_seed), ProcessEngine::rng_algo(), cfg.n);
  out.graph_text = graph_to_string(eng.graph(), header);
  return out;
}

template <typename Get>
nlohmann::ordered_json aggregate(const std::vector<RepOutcome>& reps, Get get) {
  double mn = std::numeric_limits<double>::infinity();
  double mx = -std::numeric_limits<double>::infinity();
  double sum = 0;
  std::size_t count = 0;
  for (const auto& r : reps) {
    const double v = static_cast<double>(get(r));
    if (std::isnan(v)) continue;
    mn = std::min(mn, v);
    mx = std::max(mx, v);
    sum += v;
    ++count;
  }
  if (count == 0) return nullptr;
  nlohmann::ordered_json j;
  j["mean"] = round9(sum / static_cast<double>(count));
  j["min"] = round9(mn);
  j["max"] = round9(mx);
  return j;
}

nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["seed"] = cfg.seed;
  j["reps"] = cfg.reps;
  j["stop"] = cfg.stop == StopRule::Kind::Completion ? "completion" : "imax";
  j["imax_eps"] = round9(cfg.imax_eps);
  j["eps"] = round9(cfg.eps);
  j["rects"] = cfg.rects;
  j["d2_samples"] = cfg.d2_samples;
  j["cadence"] = cfg.cadence;
  j["exact_limit"] = cfg.exact_limit;
  j["beta_restarts"] = cfg.beta_restarts;
  j["rng_algo"] = ProcessEngine::rng_algo();
  j["seed_mix"] = "splitmix64";
  j["tool_version"] = kToolVersion;
  return j;
}

}  // namespace

RunOutputs run_replications(const RunConfig& cfg) {
  cfg.validate();

  RunOutputs outputs;
  outputs.reps.resize(cfg.reps);

  const std::uint32_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint32_t workers = std::min(cfg.reps, cfg.threads ? cfg.threads : hw);

  std::atomic<std::uint32_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::uint32_t r = next.fetch_add(1);
      if (r >= cfg.reps || failed.load()) return;
      try {
        outputs.reps[r] = run_one(cfg, r);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        if (error_message.empty()) error_message = e.what();
        return;
      }
    }
  };

  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw std::runtime_error("replication failed: " + error_message);

  nlohmann::ordered_json summary;
  summary["config"] = config_json(cfg);
  auto reps_json = nlohmann::ordered_json::array();
  for (const auto& r : outputs.reps) {
    nlohmann::ordered_json rj;
    rj["rep"] = r.rep;
    rj["seed"] = r.rep_seed;
    rj["M"] = r.final_edges;
    rj["maxdeg"] = r.max_degree;
    rj["beta"] = r.beta;
    rj["beta_flag"] = r.beta_exact ? "exact" : "heuristic-lower-bound";
    rj["rect_coverage"] = json_number(r.rect_coverage);
    rj["max_open_dev"] = json_number(r.max_open_dev);
    rj["terminated"] = r.terminated;
    reps_json.push_back(std::move(rj));
  }
  summary["replications"] = std::move(reps_json);

  nlohmann::ordered_json agg;
  agg["M"] = aggregate(outputs.reps, [](const RepOutcome& r) { return static_cast<double>(r.final_edges); });
  agg["maxdeg"] = aggregate(outputs.reps, [](const RepOutcome& r) { return static_cast<double>(r.max_degree); });
  agg["beta"] = aggregate(outputs.reps, [](const RepOutcome& r) { return static_cast<double>(r.beta); });
  agg["rect_coverage"] = aggregate(outputs.reps, [](const RepOutcome& r) { return r.rect_coverage; });
  agg["max_open_dev"] = aggregate(outputs.reps, [](const RepOutcome& r) { return r.max_open_dev; });
  summary["aggregates"] = std::move(agg);

  outputs.summary = std::move(summary);
  return outputs;
}

namespace {

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

const char* kPlotStub = R"PY(#!/usr/bin/env python3
"""Plot stub for run artifacts: trajectories against predicted curves.

Usage: python3 plot.py [run_directory]
"""
import csv, glob, os, sys

try:
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit("matplotlib not available; the CSVs are plain data, plot with any tool")

root = sys.argv[1] if len(sys.argv) > 1 else "."
fig, (ax_open, ax_d2) = plt.subplots(1, 2, figsize=(11, 4))
for path in sorted(glob.glob(os.path.join(root, "traj_r*.csv"))):
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    t = [float(r["t"]) for r in rows]
    ax_open.plot(t, [float(r["open"]) for r in rows], lw=0.8)
    ax_open.plot(t, [float(r["open_pred"]) for r in rows], "k--", lw=0.6)
    ax_d2.plot(t, [float(r["d2_mean"]) for r in rows], lw=0.8)
    ax_d2.plot(t, [float(r["d2_pred"]) for r in rows], "k--", lw=0.6)
ax_open.set(xlabel="t", ylabel="open pairs", yscale="log")
ax_d2.set(xlabel="t", ylabel="d2 sample mean")
fig.tight_layout()
fig.savefig(os.path.join(root, "trajectories.png"), dpi=150)
print("wrote", os.path.join(root, "trajectories.png"))
)PY";

}  // namespace

void write_run_artifacts(const RunConfig& cfg, const RunOutputs& outputs) {
  const fs::path dir(cfg.out_dir.empty() ? "." : cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + dir.string());

  for (const auto& r : outputs.reps) {
    char name[40];
    std::snprintf(name, sizeof(name), "traj_r%04u.csv", r.rep);
    write_text_file(dir / name, r.trajectory_csv_text);
    std::snprintf(name, sizeof(name), "graph_r%04u.txt", r.rep);
    write_text_file(dir / name, r.graph_text);
  }
  write_text_file(dir / "summary.json", outputs.summary.dump(2) + "\n");
  write_text_file(dir / "plot.py", kPlotStub);
}

SweepOutputs run_sweep(const RunConfig& base, const std::vector<std::uint32_t>& n_list, bool synthetic) {
  if (n_list.size() < 2) throw std::invalid_argument("sweep: need at least 2 values of n");
  base.validate();

  std::vector<std::pair<double, double>> edge_points, beta_points;
  auto points_json = nlohmann::ordered_json::array();

  SweepOutputs out;
  out.report["config"] = nlohmann::ordered_json::object();
  out.report["config"]["seed"] = base.seed;
  out.report["config"]["reps"] = base.reps;
  out.report["config"]["eps"] = round9(base.eps);
  out.report["config"]["stop"] = base.stop == StopRule::Kind::Completion ? "completion" : "imax";
  out.report["config"]["rng_algo"] = ProcessEngine::rng_algo();
  out.report["config"]["tool_version"] = kToolVersion;
  out.report["n_list"] = n_list;
  out.report["synthetic"] = synthetic;

  for (std::uint32_t n : n_list) {
    RunConfig cfg = base;
    cfg.n = n;
    if (!base.out_dir.empty()) {
      char sub[24];
      std::snprintf(sub, sizeof(sub), "n%04u", n);
      cfg.out_dir = (fs::path(base.out_dir) / sub).string();
    }
    RunOutputs runs = run_replications(cfg);
    if (!base.out_dir.empty()) write_run_artifacts(cfg, runs);

    for (const auto& r : runs.reps) {
      double m_value = static_cast<double>(r.final_edges);
      double b_value = static_cast<double>(r.beta);
      if (synthetic) {
        m_value = std::pow(static_cast<double>(n), 4.0 / 3.0);
        b_value = std::pow(static_cast<double>(n), 2.0 / 3.0);
      }
      edge_points.push_back({static_cast<double>(n), m_value});
      beta_points.push_back({static_cast<double>(n), b_value});
      nlohmann::ordered_json pj;
      pj["n"] = n;
      pj["rep"] = r.rep;
      pj["M"] = round9(m_value);
      pj["beta"] = round9(b_value);
      pj["beta_flag"] = r.beta_exact ? "exact" : "heuristic-lower-bound";
      pj["maxdeg"] = r.max_degree;
      points_json.push_back(std::move(pj));
    }
  }

  auto fit_json = [](const FitResult& f) {
    nlohmann::ordered_json j;
    j["slope"] = round9(f.slope);
    j["intercept"] = round9(f.intercept);
    j["residual_norm"] = round9(f.residual_norm);
    j["points"] = f.points;
    return j;
  };

  out.report["points"] = std::move(points_json);
  out.report["fit_edges"] = fit_json(fit_exponent(edge_points));
  out.report["fit_beta"] = fit_json(fit_exponent(beta_points));
  out.report["reference_note"] = ReferenceBounds::kNote;
  return out;
}

void write_sweep_artifacts(const RunConfig& base, const SweepOutputs& outputs) {
  const fs::path dir(base.out_dir.empty() ? "." : base.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + dir.string());
  write_text_file(dir / "sweep.json", outputs.report.dump(2) + "\n");
}

}  // namespace c4free
