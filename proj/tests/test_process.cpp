#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "c4free/process.hpp"
#include "oracles.hpp"

using namespace c4free;

namespace {

// Every structural invariant the engine promises after a step.
void check_engine_invariants(const ProcessEngine& eng) {
  const std::uint32_t n = eng.n();
  std::size_t open = 0, closed = 0, chosen = 0;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const Pair p{x, y};
      const std::uint64_t paths = oracles::count_paths3(eng.graph(), x, y);
      CHECK(eng.closure_counter(p) == paths);
      switch (eng.state_of(p)) {
        case PairState::Open:
          ++open;
          CHECK(paths == 0);
          CHECK_FALSE(eng.graph().has_edge(p));
          break;
        case PairState::Closed:
          ++closed;
          CHECK(paths > 0);
          CHECK_FALSE(eng.graph().has_edge(p));
          break;
        case PairState::Chosen:
          ++chosen;
          CHECK(paths == 0);
          CHECK(eng.graph().has_edge(p));
          break;
      }
    }
  CHECK(open + closed + chosen == static_cast<std::size_t>(n) * n);
  CHECK(open == eng.open_count());
  CHECK(chosen == eng.step_index());
  CHECK(eng.graph().verify_k22_free());
}

}  // namespace

TEST_CASE("init") {
  ProcessEngine e3(3, 1);
  CHECK(e3.open_count() == 9);
  CHECK(e3.graph().m() == 0);

  ProcessEngine e1(1, 1);
  CHECK(e1.open_count() == 1);

  CHECK_THROWS_AS(ProcessEngine(0, 1), std::invalid_argument);

  ProcessEngine a(5, 77), b(5, 77);
  a.run(StopRule::completion());
  b.run(StopRule::completion());
  CHECK(a.history() == b.history());
}

TEST_CASE("closure batches (newly closed pairs)") {
  ProcessEngine eng(3, 0);
  eng.force({0, 0});
  CHECK(eng.last_closed().empty());  // closure needs 3 edges
  eng.force({1, 0});
  CHECK(eng.last_closed().empty());
  eng.force({1, 1});
  CHECK(eng.last_closed() == std::vector<Pair>{{0, 1}});
  CHECK(eng.state_of({0, 1}) == PairState::Closed);
  eng.force({2, 2});
  CHECK(eng.last_closed().empty());

  CHECK_THROWS_AS(eng.force({0, 1}), std::invalid_argument);  // closed, not open
  CHECK_THROWS_AS(eng.force({0, 0}), std::invalid_argument);  // chosen
}

TEST_CASE("n=2 always terminates with M=3 and a maximal graph") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ProcessEngine eng(2, seed);
    const std::uint64_t m = eng.run(StopRule::completion());
    CHECK(m == 3);
    CHECK(eng.terminated());
    CHECK(eng.graph().verify_k22_free());
    // the one non-chosen pair is closed
    for (std::uint32_t x = 0; x < 2; ++x)
      for (std::uint32_t y = 0; y < 2; ++y)
        if (!eng.graph().has_edge({x, y})) {
          CHECK(eng.state_of({x, y}) == PairState::Closed);
          CHECK(eng.closure_counter({x, y}) == 1);
        }
  }
}

TEST_CASE("n=1 takes one step then terminates") {
  ProcessEngine eng(1, 9);
  auto s1 = eng.step();
  CHECK_FALSE(s1.terminated);
  CHECK(eng.step_index() == 1);
  auto s2 = eng.step();
  CHECK(s2.terminated);
  CHECK(eng.step_index() == 1);
}

TEST_CASE("run with a step budget") {
  ProcessEngine eng(3, 4);
  CHECK(eng.run(StopRule::max_steps_of(2)) == 2);
  CHECK(eng.graph().m() == 2);

  ProcessEngine big(64, 11);
  const std::uint64_t m = big.run(StopRule::completion());
  CHECK(m >= 1);
  CHECK(m <= 64ull * 64);
  CHECK(big.graph().verify_k22_free());
  CHECK(big.terminated());
  CHECK(big.open_count() == 0);
}

TEST_CASE("counters match brute-force path counts after every step") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      ProcessEngine eng(n, 31 * n + seed);
      std::size_t prev_open = eng.open_count();
      for (;;) {
        auto out = eng.step();
        if (out.terminated) break;
        CHECK(eng.open_count() < prev_open);  // strictly decreasing
        prev_open = eng.open_count();
        check_engine_invariants(eng);
      }
      // maximality: every non-chosen pair carries a positive counter
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
          if (eng.state_of({x, y}) != PairState::Chosen) CHECK(eng.closure_counter({x, y}) > 0);
    }
  }
}

TEST_CASE("d2 on fixed configurations") {
  ProcessEngine eng(3, 0);
  eng.force({0, 0});
  eng.force({1, 0});
  CHECK(eng.d2_exact({0, 1}) == 1);
  CHECK(eng.d2_reference({0, 1}) == 1);

  ProcessEngine empty(4, 0);
  CHECK(empty.d2_exact({2, 3}) == 0);

  ProcessEngine one(2, 0);
  one.force({0, 0});
  CHECK(one.d2_exact({1, 1}) == 0);
  CHECK(one.d2_reference({1, 1}) == 0);

  CHECK_THROWS_AS(eng.d2_exact({0, 0}), std::invalid_argument);  // chosen, not open
}

TEST_CASE("d2 optimized equals reference for all open pairs during runs") {
  for (std::uint32_t n = 3; n <= 8; ++n) {
    ProcessEngine eng(n, 5 * n);
    for (;;) {
      for (std::size_t i = 0; i < eng.open_count(); ++i) {
        const Pair p = eng.pair_of(eng.open_pool().at(i));
        CHECK(eng.d2_exact(p) == eng.d2_reference(p));
      }
      if (eng.step().terminated) break;
    }
  }
}

TEST_CASE("open pool starts lexicographic") {
  ProcessEngine eng(3, 0);
  for (std::uint32_t id = 0; id < 9; ++id) CHECK(eng.open_pool().at(id) == id);
}

TEST_CASE("imax step budget formula") {
  CHECK(imax_steps(1) == 0);
  CHECK(imax_steps(512, 0.3) == 2262);  // floor(0.3 * 512^{4/3} * (ln 512)^{1/3})
  CHECK(imax_steps(512, 0.6) == 4524);
  CHECK(imax_steps(64, 0.3) == 123);
}
