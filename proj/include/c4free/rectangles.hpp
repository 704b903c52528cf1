#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "c4free/bigraph.hpp"
#include "c4free/rng.hpp"

namespace c4free {

class ProcessEngine;

/// Rectangle side alpha = ceil(2 eps^{-1} n^{2/3} (ln n)^{2/3}), clamped to
/// n. At desk scales the clamp is typically active and the tracked
/// rectangle degenerates to the full board.
std::uint32_t rectangle_alpha(std::uint32_t n, double eps);

/// Threshold n^{2/3 - 12 eps^3} above which a one-step drop of Q_I counts
/// as "large" and feeds the A_I accumulator.
double large_step_threshold(std::uint32_t n, double eps);

/// Reference ceiling n^{1 + 45 eps^3} for A_I.
double ai_reference_bound(std::uint32_t n, double eps);

/// One tracked rectangle I = I_X x I_Y with |I_X| = |I_Y| = alpha, a live
/// count q_I of open pairs inside it and the accumulator a_I of large
/// one-step drops.
struct TrackedRectangle {
  std::vector<std::uint32_t> ix, iy;
  std::vector<std::uint8_t> mem_x, mem_y;
  std::uint64_t q_i = 0;
  std::uint64_t a_i = 0;
  std::uint64_t max_abs_delta = 0;
  bool received_edge = false;
  double min_ratio = 1.0;  // min over steps of q_I / (alpha^2 q(t))

  bool contains(Pair p) const { return mem_x[p.x] && mem_y[p.y]; }
  std::uint64_t q_tilde() const { return q_i + a_i; }
};

/// Maintains k uniformly sampled rectangles against the step stream of one
/// process run.
class RectangleTracker {
 public:
  RectangleTracker(std::uint32_t n, std::uint32_t k, double eps, std::uint64_t seed);

  /// Accounts one applied step: the chosen pair plus that step's newly
  /// closed pairs, with q = e^{-t^3} at the post-step time.
  void on_step(Pair chosen, std::span<const Pair> closed, double q_of_t);

  std::uint32_t alpha() const { return alpha_; }
  double threshold() const { return threshold_; }
  const std::vector<TrackedRectangle>& rectangles() const { return rects_; }

  /// Fraction of rectangles that received a chosen edge (NaN when k = 0).
  double coverage() const;

  /// Minimum over rectangles of the current q_I / (alpha^2 q) (NaN when empty).
  double current_min_ratio(double q_of_t) const;
  double max_ai() const;

  /// From-scratch recount of open pairs inside rectangle `r` (test oracle).
  std::uint64_t recount_open(const ProcessEngine& eng, std::size_t r) const;

 private:
  std::uint32_t n_;
  std::uint32_t alpha_;
  double threshold_;
  std::vector<TrackedRectangle> rects_;
};

}  // namespace c4free
