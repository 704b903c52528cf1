#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "c4free/hypergraph.hpp"
#include "c4free/process.hpp"
#include "oracles.hpp"

using namespace c4free;

namespace {

std::vector<std::uint64_t> vertex_degrees(const Hypergraph& h) {
  std::vector<std::uint64_t> deg(h.N, 0);
  for (const auto& e : h.edges)
    for (std::uint32_t v : e) ++deg[v];
  return deg;
}

// Drives the greedy engine down every possible choice-index sequence and
// calls `leaf` with the final independent-set size.
void exhaust_greedy(const Hypergraph& h, const std::function<void(std::size_t)>& leaf) {
  std::function<void(GreedyEngine&)> rec = [&](GreedyEngine& eng) {
    if (eng.terminated()) {
      leaf(eng.independent_set().size());
      return;
    }
    for (std::size_t i = 0; i < eng.live_count(); ++i) {
      GreedyEngine copy = eng;
      copy.step_at(i);
      rec(copy);
    }
  };
  GreedyEngine eng(h);
  rec(eng);
}

}  // namespace

TEST_CASE("build_k22_hypergraph shape") {
  auto h2 = build_k22_hypergraph(2);
  CHECK(h2.N == 4);
  CHECK(h2.r == 4);
  CHECK(h2.edges.size() == 1);
  h2.validate();

  auto h3 = build_k22_hypergraph(3);
  CHECK(h3.N == 9);
  CHECK(h3.edges.size() == 9);  // C(3,2)^2
  for (std::uint64_t d : vertex_degrees(h3)) CHECK(d == 4);

  auto h4 = build_k22_hypergraph(4);
  for (std::uint64_t d : vertex_degrees(h4)) CHECK(d == 9);  // (n-1)^2

  CHECK_THROWS_AS(build_k22_hypergraph(1), std::invalid_argument);
}

TEST_CASE("degree profile of the K_{2,2} hypergraph") {
  for (std::uint32_t n : {3u, 5u}) {
    auto p = degree_profile(build_k22_hypergraph(n));
    CHECK(p.d_min == (n - 1) * (n - 1));
    CHECK(p.d_max == (n - 1) * (n - 1));
    CHECK(p.delta.at(2) == n - 1);
    CHECK(p.delta.at(3) == 1);
    CHECK(p.gamma.at(3) == 0);
  }
  for (std::uint32_t n = 2; n <= 8; ++n) {
    auto h = build_k22_hypergraph(n);
    const std::uint64_t side_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    CHECK(h.edges.size() == side_pairs * side_pairs);
    auto p = degree_profile(h);
    CHECK(p.gamma.at(3) == 0);
    if (n >= 3) CHECK(p.delta.at(2) >= p.delta.at(3));  // Delta non-increasing
  }
}

TEST_CASE("degree profile of the single-edge hypergraph") {
  Hypergraph h;
  h.N = 4;
  h.r = 4;
  h.edges = {{0, 1, 2, 3}};
  auto p = degree_profile(h);
  CHECK(p.d_max == 1);
  CHECK(p.delta.at(2) == 1);
  CHECK(p.delta.at(3) == 1);
  CHECK(p.gamma.at(3) == 0);
}

TEST_CASE("theorem hypothesis checks") {
  // n = 50, eps = 0.1: D = 2401 vs N^0.1 = 2.19, Delta_2 = 49 vs
  // D^{2/3-0.1} = 82.3, Delta_3 = 1 vs D^{1/3-0.1} = 6.15, Gamma_3 = 0.
  auto p = degree_profile(build_k22_hypergraph(50));
  auto rep = check_bb_conditions(p, 0.1);
  CHECK(rep.regular);
  CHECK(rep.d_exceeds_n_eps);
  CHECK(rep.delta_ok.at(2));
  CHECK(rep.delta_ok.at(3));
  CHECK(rep.gamma_ok);
  CHECK(rep.all_ok());
  CHECK(rep.d == doctest::Approx(2401.0));
  CHECK(rep.n_eps == doctest::Approx(2.1867241478865562));

  // n = 3, eps = 0.3: D = 4 > 9^{0.3} = 1.93.
  auto p3 = degree_profile(build_k22_hypergraph(3));
  auto rep3 = check_bb_conditions(p3, 0.3);
  CHECK(rep3.d_exceeds_n_eps);

  // Irregular: one vertex in 2 edges, another in 1.
  Hypergraph irr;
  irr.N = 5;
  irr.r = 2;
  irr.edges = {{0, 1}, {0, 2}, {3, 4}};
  auto repi = check_bb_conditions(degree_profile(irr), 0.2);
  CHECK_FALSE(repi.regular);
  CHECK_FALSE(repi.all_ok());
}

TEST_CASE("greedy run on the edgeless hypergraph selects everything") {
  Hypergraph h;
  h.N = 5;
  h.r = 4;
  auto res = greedy_independent_run(h, 123);
  CHECK(res.independent_set.size() == 5);
}

TEST_CASE("single 4-edge: |I| = 3 over every selection order") {
  Hypergraph h;
  h.N = 4;
  h.r = 4;
  h.edges = {{0, 1, 2, 3}};
  exhaust_greedy(h, [](std::size_t size) { CHECK(size == 3); });
}

TEST_CASE("K_{2,2} hypergraph at n=2: |I| = 3 over every selection order") {
  exhaust_greedy(build_k22_hypergraph(2), [](std::size_t size) { CHECK(size == 3); });
}

TEST_CASE("independent sets never contain a full original edge") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto h = build_k22_hypergraph(4);
    auto res = greedy_independent_run(h, seed);
    std::set<std::uint32_t> sel(res.independent_set.begin(), res.independent_set.end());
    for (const auto& e : h.edges) {
      bool all = true;
      for (std::uint32_t v : e) all = all && sel.count(v);
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("engine equivalence under a shared choice stream") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto r2 = equivalence_check(2, seed);
    CHECK(r2.equal);
    CHECK(r2.steps == 3);
  }
  for (std::uint32_t n : {3u, 4u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto r = equivalence_check(n, 1000 + seed);
      INFO("n=", n, " seed=", seed, " detail=", r.detail);
      CHECK(r.equal);
    }
  }
}

TEST_CASE("greedy matches the process edge count on n=2") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto res = greedy_independent_run(build_k22_hypergraph(2), seed);
    CHECK(res.independent_set.size() == 3);
    ProcessEngine eng(2, seed);
    CHECK(eng.run(StopRule::completion()) == 3);
  }
}

TEST_CASE("hypergraph text format round trip and validation") {
  auto h = build_k22_hypergraph(3);
  std::ostringstream out;
  write_hypergraph(out, h);
  std::istringstream in(out.str());
  auto h2 = read_hypergraph(in);
  CHECK(h2.N == h.N);
  CHECK(h2.r == h.r);
  CHECK(h2.edges == h.edges);

  Hypergraph bad;
  bad.N = 3;
  bad.r = 2;
  bad.edges = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.edges = {{1, 0}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.edges = {{0, 5}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
