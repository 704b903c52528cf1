#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "c4free/analysis.hpp"
#include "c4free/harness.hpp"
#include "oracles.hpp"

using namespace c4free;

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.reps = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.reps = 1;
  cfg.eps = 0.7;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.eps = 0.1;
  cfg.n = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("n=2 replications all end at M=3 with beta=1") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.reps = 50;
  cfg.seed = 20240601;
  auto out = run_replications(cfg);
  REQUIRE(out.reps.size() == 50);
  for (const auto& r : out.reps) {
    CHECK(r.final_edges == 3);
    CHECK(r.beta == 1);
    CHECK(r.beta_exact);
    CHECK(r.terminated);
    CHECK(r.rep_seed == mix_seed(cfg.seed, r.rep));
  }
  CHECK(out.summary["aggregates"]["M"]["mean"] == 3.0);
  CHECK(out.summary["aggregates"]["M"]["min"] == 3.0);
  CHECK(out.summary["aggregates"]["M"]["max"] == 3.0);
}

TEST_CASE("summary aggregates equal recomputation from the entries") {
  RunConfig cfg;
  cfg.n = 12;
  cfg.reps = 6;
  cfg.seed = 5;
  auto out = run_replications(cfg);
  double sum = 0, mn = 1e18, mx = -1e18;
  for (const auto& r : out.summary["replications"]) {
    const double m = r["M"].get<double>();
    sum += m;
    mn = std::min(mn, m);
    mx = std::max(mx, m);
  }
  CHECK(out.summary["aggregates"]["M"]["mean"].get<double>() == doctest::Approx(round9(sum / 6)));
  CHECK(out.summary["aggregates"]["M"]["min"].get<double>() == mn);
  CHECK(out.summary["aggregates"]["M"]["max"].get<double>() == mx);
}

TEST_CASE("outputs are identical across worker-pool sizes") {
  RunConfig cfg;
  cfg.n = 24;
  cfg.reps = 5;
  cfg.seed = 99;
  cfg.rects = 2;
  cfg.threads = 1;
  auto serial = run_replications(cfg);
  cfg.threads = 4;
  auto parallel = run_replications(cfg);
  CHECK(serial.summary.dump(2) == parallel.summary.dump(2));
  for (std::size_t r = 0; r < serial.reps.size(); ++r) {
    CHECK(serial.reps[r].trajectory_csv_text == parallel.reps[r].trajectory_csv_text);
    CHECK(serial.reps[r].graph_text == parallel.reps[r].graph_text);
  }
}

TEST_CASE("graph artifacts round-trip through the parser") {
  RunConfig cfg;
  cfg.n = 16;
  cfg.reps = 3;
  cfg.seed = 8;
  auto out = run_replications(cfg);
  for (const auto& r : out.reps) {
    std::istringstream in(r.graph_text);
    auto g = read_graph(in);
    CHECK(g.n() == cfg.n);
    CHECK(g.m() == r.final_edges);
    CHECK(g.verify_k22_free());
    CHECK(g.max_degree() == r.max_degree);
  }
}

TEST_CASE("imax stop mode honors the step budget") {
  RunConfig cfg;
  cfg.n = 64;
  cfg.reps = 2;
  cfg.seed = 4;
  cfg.stop = StopRule::Kind::MaxSteps;
  cfg.imax_eps = 0.3;
  auto out = run_replications(cfg);
  const std::uint64_t budget = imax_steps(64, 0.3);
  for (const auto& r : out.reps) {
    CHECK(r.final_edges == budget);  // the process cannot die this early
    CHECK_FALSE(r.terminated);
  }
}

TEST_CASE("sweep with synthetic injection recovers exact exponents") {
  RunConfig base;
  base.n = 8;
  base.reps = 2;
  base.seed = 3;
  auto out = run_sweep(base, {8, 16, 32}, true);
  // report values carry 9 significant digits; the in-memory fit itself is
  // exact to 1e-9 (see the fit_exponent power-law test)
  CHECK(out.report["fit_edges"]["slope"].get<double>() == round9(4.0 / 3.0));
  CHECK(out.report["fit_beta"]["slope"].get<double>() == round9(2.0 / 3.0));
  CHECK(out.report["points"].size() == 6);

  CHECK_THROWS_AS(run_sweep(base, {8}, false), std::invalid_argument);
}

TEST_CASE("small real sweep has a sane structure") {
  RunConfig base;
  base.reps = 2;
  base.seed = 77;
  auto out = run_sweep(base, {4, 8}, false);
  CHECK(out.report["points"].size() == 4);
  CHECK(out.report["fit_edges"].contains("slope"));
  CHECK(out.report["fit_beta"].contains("slope"));
  CHECK(out.report["reference_note"] == ReferenceBounds::kNote);
}
