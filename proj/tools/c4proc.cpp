// c4proc: experiment driver for the bipartite K_{2,2}-free process.
//
// Subcommands:
//   run      replicated instrumented runs -> trajectory CSVs, graph files,
//            summary JSON
//   sweep    runs over a list of n with power-law fits of M and beta
//   audit    K_{2,2}/degree/density audits of a stored graph file
//   certify  completion run -> independence certificate JSON
//
// Exit codes: 0 success or audit pass, 1 audit fail, 2 usage error,
// 3 I/O or parse error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "c4free/analysis.hpp"
#include "c4free/certificate.hpp"
#include "c4free/harness.hpp"
#include "c4free/independence.hpp"
#include "c4free/process.hpp"
#include "c4free/trajectory.hpp"
#include "c4free/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAuditFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::string config_file;
  std::string stop_mode = "completion";
};

void add_config_flags(CLI::App* cmd, c4free::RunConfig& cfg, CommonFlags& common) {
  cmd->add_option("--n", cfg.n, "side size of K_{n,n}");
  cmd->add_option("--seed", cfg.seed, "base 64-bit seed");
  cmd->add_option("--reps", cfg.reps, "number of replications");
  cmd->add_option("--stop", common.stop_mode, "stop rule: completion | imax")
      ->check(CLI::IsMember({"completion", "imax"}));
  cmd->add_option("--imax-eps", cfg.imax_eps, "coefficient of the imax step budget");
  cmd->add_option("--eps", cfg.eps, "analysis exponent parameter, in (0, 0.5]");
  cmd->add_option("--rects", cfg.rects, "tracked rectangles per run");
  cmd->add_option("--d2-samples", cfg.d2_samples, "open pairs sampled for d2 per record");
  cmd->add_option("--cadence", cfg.cadence, "record every k steps (0: ceil(n^{2/3}))");
  cmd->add_option("--out", cfg.out_dir, "output directory");
  cmd->add_option("--exact-limit", cfg.exact_limit, "largest n for exact independence search");
  cmd->add_option("--threads", cfg.threads, "worker pool size (0: hardware)");
  cmd->add_option("--config", common.config_file, "JSON config file; flags override file values");
}

// Applies config-file values for options the command line did not set.
void apply_config_file(const CLI::App* cmd, c4free::RunConfig& cfg, CommonFlags& common,
                       std::vector<std::uint32_t>* n_list) {
  if (common.config_file.empty()) return;
  std::ifstream in(common.config_file);
  if (!in) throw std::runtime_error("cannot open config file: " + common.config_file);
  nlohmann::json j = nlohmann::json::parse(in);

  auto absent = [&](const char* flag) { return cmd->count(flag) == 0; };
  if (j.contains("n") && absent("--n")) cfg.n = j["n"].get<std::uint32_t>();
  if (j.contains("seed") && absent("--seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("reps") && absent("--reps")) cfg.reps = j["reps"].get<std::uint32_t>();
  if (j.contains("stop") && absent("--stop")) common.stop_mode = j["stop"].get<std::string>();
  if (j.contains("imax_eps") && absent("--imax-eps")) cfg.imax_eps = j["imax_eps"].get<double>();
  if (j.contains("eps") && absent("--eps")) cfg.eps = j["eps"].get<double>();
  if (j.contains("rects") && absent("--rects")) cfg.rects = j["rects"].get<std::uint32_t>();
  if (j.contains("d2_samples") && absent("--d2-samples"))
    cfg.d2_samples = j["d2_samples"].get<std::uint32_t>();
  if (j.contains("cadence") && absent("--cadence")) cfg.cadence = j["cadence"].get<std::uint64_t>();
  if (j.contains("out") && absent("--out")) cfg.out_dir = j["out"].get<std::string>();
  if (j.contains("exact_limit") && absent("--exact-limit"))
    cfg.exact_limit = j["exact_limit"].get<std::uint32_t>();
  if (j.contains("threads") && absent("--threads")) cfg.threads = j["threads"].get<std::uint32_t>();
  if (n_list && j.contains("n_list") && absent("--n-list"))
    *n_list = j["n_list"].get<std::vector<std::uint32_t>>();
  if (common.stop_mode != "completion" && common.stop_mode != "imax")
    throw std::invalid_argument("config: stop must be completion or imax");
}

void finalize_stop(c4free::RunConfig& cfg, const CommonFlags& common) {
  cfg.stop = common.stop_mode == "imax" ? c4free::StopRule::Kind::MaxSteps
                                        : c4free::StopRule::Kind::Completion;
}

int cmd_run(const c4free::RunConfig& cfg) {
  auto outputs = c4free::run_replications(cfg);
  c4free::write_run_artifacts(cfg, outputs);
  const auto& agg = outputs.summary["aggregates"];
  std::cout << "run: n=" << cfg.n << " reps=" << cfg.reps << " M.mean=" << agg["M"]["mean"]
            << " maxdeg.max=" << agg["maxdeg"]["max"] << " beta.mean=" << agg["beta"]["mean"] << "\n"
            << "artifacts in " << (cfg.out_dir.empty() ? "." : cfg.out_dir) << "\n";
  return kExitOk;
}

int cmd_sweep(const c4free::RunConfig& base, const std::vector<std::uint32_t>& n_list, bool synthetic) {
  auto outputs = c4free::run_sweep(base, n_list, synthetic);
  c4free::write_sweep_artifacts(base, outputs);
  std::cout << "sweep: edges slope=" << outputs.report["fit_edges"]["slope"]
            << " beta slope=" << outputs.report["fit_beta"]["slope"] << "\n"
            << "report in " << (base.out_dir.empty() ? "." : base.out_dir) << "/sweep.json\n";
  return kExitOk;
}

int cmd_audit(const std::string& graph_file, double eps, std::uint32_t effort) {
  c4free::BipartiteGraph g = [&] {
    try {
      return c4free::read_graph_file(graph_file);
    } catch (const std::exception& e) {
      std::cerr << "parse error: " << graph_file << ": " << e.what() << "\n";
      std::exit(kExitIo);
    }
  }();

  const bool k22 = g.verify_k22_free();
  const auto deg = c4free::audit_degrees(g, eps);
  const auto dens = c4free::audit_density(g, eps, effort);

  std::cout << "graph: n=" << g.n() << " m=" << g.m() << "\n";
  std::cout << "k22_free: " << (k22 ? "true" : "false") << "\n";
  std::cout << "degree audit: maxdeg=" << deg.max_degree << " bound=" << c4free::fmt9(deg.bound)
            << " maxdeg/n^{1/3}=" << c4free::fmt9(deg.ratio_to_cuberoot) << " -> "
            << (deg.pass ? "pass" : "fail") << "\n";
  std::cout << "density audit (falsifier, effort=" << effort << "): best score "
            << c4free::fmt9(dens.best_score) << " at a=" << dens.best_a << " b=" << dens.best_b
            << " e=" << dens.best_edges << " -> "
            << (dens.violation_found ? "violation found" : "no violation found") << "\n";
  return (k22 && deg.pass) ? kExitOk : kExitAuditFail;
}

int cmd_certify(const c4free::RunConfig& cfg) {
  c4free::ProcessEngine eng(cfg.n, c4free::mix_seed(cfg.seed, 0));
  eng.run(c4free::StopRule::completion());
  const auto cert = c4free::make_certificate(eng, cfg.exact_limit, cfg.eps, cfg.beta_restarts,
                                             c4free::mix_seed(cfg.seed, 0xBE7AULL));

  const auto j = c4free::certificate_json(cert);
  namespace fs = std::filesystem;
  const fs::path dir(cfg.out_dir.empty() ? "." : cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + dir.string());
  char name[64];
  std::snprintf(name, sizeof(name), "certificate_n%u_s%llu.json", cert.n,
                static_cast<unsigned long long>(cfg.seed));
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  out << j.dump(2) << "\n";

  std::cout << "certificate: n=" << cert.n << " m=" << cert.m << " beta=" << cert.beta << " ("
            << (cert.beta_exact ? "exact" : "heuristic-lower-bound") << ")";
  if (cert.claim) std::cout << " claim: " << *cert.claim;
  std::cout << "\nwrote " << path.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite K_{2,2}-free process simulator and analysis toolkit"};
  app.set_version_flag("--version", c4free::kToolVersion);
  app.require_subcommand(1);

  c4free::RunConfig run_cfg, sweep_cfg, cert_cfg;
  CommonFlags run_common, sweep_common, cert_common;
  std::vector<std::uint32_t> n_list;
  bool synthetic = false;
  std::string graph_file;
  double audit_eps = 0.1;
  std::uint32_t audit_effort = 64;

  CLI::App* run = app.add_subcommand("run", "replicated instrumented runs");
  add_config_flags(run, run_cfg, run_common);

  CLI::App* sweep = app.add_subcommand("sweep", "n-sweep with scaling fits");
  add_config_flags(sweep, sweep_cfg, sweep_common);
  sweep->add_option("--n-list", n_list, "comma-separated side sizes")->delimiter(',');
  sweep->add_flag("--synthetic", synthetic, "replace measured values with exact power laws (fit oracle)");

  CLI::App* audit = app.add_subcommand("audit", "audit a stored graph file");
  audit->add_option("graph", graph_file, "graph file in the text format")->required();
  audit->add_option("--eps", audit_eps, "audit exponent parameter");
  audit->add_option("--effort", audit_effort, "density falsifier restarts");

  CLI::App* certify = app.add_subcommand("certify", "completion run + independence certificate");
  add_config_flags(certify, cert_cfg, cert_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) {
      apply_config_file(run, run_cfg, run_common, nullptr);
      finalize_stop(run_cfg, run_common);
      return cmd_run(run_cfg);
    }
    if (sweep->parsed()) {
      apply_config_file(sweep, sweep_cfg, sweep_common, &n_list);
      finalize_stop(sweep_cfg, sweep_common);
      return cmd_sweep(sweep_cfg, n_list, synthetic);
    }
    if (audit->parsed()) {
      return cmd_audit(graph_file, audit_eps, audit_effort);
    }
    if (certify->parsed()) {
      apply_config_file(certify, cert_cfg, cert_common, nullptr);
      finalize_stop(cert_cfg, cert_common);
      return cmd_certify(cert_cfg);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
