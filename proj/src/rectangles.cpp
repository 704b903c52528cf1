#include "c4free/rectangles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "c4free/process.hpp"

namespace c4free {

std::uint32_t rectangle_alpha(std::uint32_t n, double eps) {
  if (n < 2) return n;
  const double ln_n = std::log(static_cast<double>(n));
  const double a = std::ceil(2.0 / eps * std::pow(n, 2.0 / 3.0) * std::pow(ln_n, 2.0 / 3.0));
  return static_cast<std::uint32_t>(std::min<double>(a, n));
}

double large_step_threshold(std::uint32_t n, double eps) {
  return std::pow(static_cast<double>(n), 2.0 / 3.0 - 12.0 * eps * eps * eps);
}

double ai_reference_bound(std::uint32_t n, double eps) {
  return std::pow(static_cast<double>(n), 1.0 + 45.0 * eps * eps * eps);
}

RectangleTracker::RectangleTracker(std::uint32_t n, std::uint32_t k, double eps, std::uint64_t seed)
    : n_(n), alpha_(rectangle_alpha(n, eps)), threshold_(large_step_threshold(n, eps)) {
  Rng rng(seed);
  std::vector<std::uint32_t> pool(n);
  auto sample_side = [&](std::vector<std::uint32_t>& out, std::vector<std::uint8_t>& mem) {
    std::iota(pool.begin(), pool.end(), 0u);
    // Partial Fisher-Yates: the first alpha slots become the sample.
    for (std::uint32_t i = 0; i < alpha_; ++i) {
      const std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
      std::swap(pool[i], pool[j]);
    }
    out.assign(pool.begin(), pool.begin() + alpha_);
    std::sort(out.begin(), out.end());
    mem.assign(n_, 0);
    for (std::uint32_t v : out) mem[v] = 1;
  };

  rects_.resize(k);
  for (auto& r : rects_) {
    sample_side(r.ix, r.mem_x);
    sample_side(r.iy, r.mem_y);
    r.q_i = static_cast<std::uint64_t>(alpha_) * alpha_;
  }
}

void RectangleTracker::on_step(Pair chosen, std::span<const Pair> closed, double q_of_t) {
  for (auto& r : rects_) {
    std::uint64_t delta = 0;
    if (r.contains(chosen)) {
      ++delta;
      r.received_edge = true;
    }
    for (const Pair& p : closed)
      if (r.contains(p)) ++delta;
    r.q_i -= delta;
    r.max_abs_delta = std::max(r.max_abs_delta, delta);
    if (static_cast<double>(delta) > threshold_) r.a_i += delta;
    const double denom = static_cast<double>(alpha_) * alpha_ * q_of_t;
    if (denom > 0) r.min_ratio = std::min(r.min_ratio, static_cast<double>(r.q_i) / denom);
  }
}

double RectangleTracker::coverage() const {
  if (rects_.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::size_t got = 0;
  for (const auto& r : rects_)
    if (r.received_edge) ++got;
  return static_cast<double>(got) / static_cast<double>(rects_.size());
}

double RectangleTracker::current_min_ratio(double q_of_t) const {
  if (rects_.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double denom = static_cast<double>(alpha_) * alpha_ * q_of_t;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : rects_) best = std::min(best, static_cast<double>(r.q_i) / denom);
  return best;
}

double RectangleTracker::max_ai() const {
  if (rects_.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::uint64_t best = 0;
  for (const auto& r : rects_) best = std::max(best, r.a_i);
  return static_cast<double>(best);
}

std::uint64_t RectangleTracker::recount_open(const ProcessEngine& eng, std::size_t r) const {
  const auto& rect = rects_[r];
  std::uint64_t count = 0;
  for (std::uint32_t x : rect.ix)
    for (std::uint32_t y : rect.iy)
      if (eng.state_of({x, y}) == PairState::Open) ++count;
  return count;
}

}  // namespace c4free
