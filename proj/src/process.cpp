#include "c4free/process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace c4free {

std::uint64_t imax_steps(std::uint32_t n, double coeff) {
  if (n < 2) return 0;
  const double ln_n = std::log(static_cast<double>(n));
  return static_cast<std::uint64_t>(std::floor(coeff * std::pow(n, 4.0 / 3.0) * std::cbrt(ln_n)));
}

ProcessEngine::ProcessEngine(std::uint32_t n, std::uint64_t seed)
    : n_(n),
      seed_(seed),
      rng_(seed),
      graph_(n == 0 ? throw std::invalid_argument("ProcessEngine: n must be >= 1") : n),
      state_(static_cast<std::size_t>(n) * n, PairState::Open),
      counter_(static_cast<std::size_t>(n) * n, 0),
      open_(n * n) {
  history_.reserve(static_cast<std::size_t>(n) * 4);
}

void ProcessEngine::bump(std::uint32_t x, std::uint32_t y) {
  const std::uint32_t id = x * n_ + y;
  if (state_[id] == PairState::Chosen)
    throw std::logic_error("ProcessEngine: chosen pair gained a closing path (K_{2,2} present)");
  if (counter_[id] == std::numeric_limits<std::uint32_t>::max())
    throw std::overflow_error("ProcessEngine: closure counter overflow");
  if (counter_[id]++ == 0 && state_[id] == PairState::Open) {
    state_[id] = PairState::Closed;
    closed_batch_.push_back(id);
  }
}

void ProcessEngine::apply_closures(std::uint32_t x, std::uint32_t y) {
  // New length-3 paths created by the edge (x, y), by the edge's role in the
  // path. The graph does not contain (x, y) yet, so N(y) excludes x and N(x)
  // excludes y automatically.
  closed_batch_.clear();

  const auto& ny = graph_.neighbors_y(y);
  const auto& nx = graph_.neighbors_x(x);

  // First edge of x-y-x'-v: closes (x, v).
  for (std::uint32_t xp : ny)
    for (std::uint32_t v : graph_.neighbors_x(xp))
      if (v != y) bump(x, v);

  // Middle edge of u-y-x-v: closes (u, v).
  for (std::uint32_t u : ny)
    for (std::uint32_t v : nx) bump(u, v);

  // Last edge of u-y'-x-y: closes (u, y).
  for (std::uint32_t yp : nx)
    for (std::uint32_t u : graph_.neighbors_y(yp))
      if (u != x) bump(u, y);

  std::sort(closed_batch_.begin(), closed_batch_.end());
  last_closed_.clear();
  for (std::uint32_t id : closed_batch_) {
    open_.remove(id);
    last_closed_.push_back(pair_of(id));
  }
}

void ProcessEngine::apply(std::uint32_t id) {
  const Pair p = pair_of(id);
  state_[id] = PairState::Chosen;
  apply_closures(p.x, p.y);
  graph_.add_edge(p);
  history_.push_back(p);
  ++step_index_;
}

ProcessEngine::Step ProcessEngine::step() {
  if (open_.empty()) return {true, {}};
  return {false, step_at(rng_.below(open_.size()))};
}

Pair ProcessEngine::step_at(std::size_t open_index) {
  const std::uint32_t id = open_.at(open_index);
  open_.remove_at(open_index);
  apply(id);
  return pair_of(id);
}

void ProcessEngine::force(Pair p) {
  const std::uint32_t id = id_of(p);
  if (p.x >= n_ || p.y >= n_) throw std::out_of_range("force: pair out of range");
  if (state_[id] != PairState::Open) throw std::invalid_argument("force: pair is not open");
  open_.remove(id);
  apply(id);
}

std::uint64_t ProcessEngine::run(StopRule stop) {
  while (!open_.empty()) {
    if (stop.kind == StopRule::Kind::MaxSteps && step_index_ >= stop.max_steps) break;
    step();
  }
  return step_index_;
}

std::uint64_t ProcessEngine::d2_exact(Pair e) const {
  const std::uint32_t u = e.x, v = e.y;
  if (u >= n_ || v >= n_) throw std::out_of_range("d2_exact: pair out of range");
  if (state_[id_of(e)] != PairState::Open) throw std::invalid_argument("d2_exact: pair is not open");

  // The quadruple {u,x'} x {v,y'} has slots (u,y'), (x',v), (x',y') besides
  // e; exactly two must be chosen and one open. The open slot determines the
  // case, so the three sums are disjoint.
  std::uint64_t count = 0;
  const auto& nu = graph_.neighbors_x(u);  // chosen (u, y')
  const auto& nv = graph_.neighbors_y(v);  // chosen (x', v)

  for (std::uint32_t yp : nu)
    for (std::uint32_t xp : nv)
      if (state_[xp * n_ + yp] == PairState::Open) ++count;

  for (std::uint32_t yp : nu)
    for (std::uint32_t xp : graph_.neighbors_y(yp))
      if (xp != u && state_[xp * n_ + v] == PairState::Open) ++count;

  for (std::uint32_t xp : nv)
    for (std::uint32_t yp : graph_.neighbors_x(xp))
      if (yp != v && state_[u * n_ + yp] == PairState::Open) ++count;

  return count;
}

std::uint64_t ProcessEngine::d2_reference(Pair e) const {
  const std::uint32_t u = e.x, v = e.y;
  if (u >= n_ || v >= n_) throw std::out_of_range("d2_reference: pair out of range");
  if (state_[id_of(e)] != PairState::Open) throw std::invalid_argument("d2_reference: pair is not open");

  std::uint64_t count = 0;
  for (std::uint32_t xp = 0; xp < n_; ++xp) {
    if (xp == u) continue;
    for (std::uint32_t yp = 0; yp < n_; ++yp) {
      if (yp == v) continue;
      int chosen = 0, open = 0;
      for (const std::uint32_t id : {u * n_ + yp, xp * n_ + v, xp * n_ + yp}) {
        if (state_[id] == PairState::Chosen) ++chosen;
        else if (state_[id] == PairState::Open) ++open;
      }
      if (chosen == 2 && open == 1) ++count;
    }
  }
  return count;
}

}  // namespace c4free
