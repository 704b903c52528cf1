#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "c4free/bigraph.hpp"

namespace c4free {

/// Scaled time t(i) = (n-1)^{2/3} * i / n^2, the natural clock of the
/// process (~ i / n^{4/3}). Exact expression, n >= 2.
double scaled_time(std::uint32_t n, std::uint64_t step);

/// Deterministic trajectory targets at scaled time t.
struct PredictedCurves {
  double q = 0;         // e^{-t^3}, predicted open fraction
  double open_pred = 0; // n^2 q
  double d2_pred = 0;   // 3 n^{2/3} t^2 q
  double envelope = 0;  // n^{4/3 - 5 eps^3} e^{t^3 + t}
};

PredictedCurves predicted_curves(std::uint32_t n, double t, double eps);

/// Reference curve shapes for b(2,t): (t/ln t)^{3/2}, t^{3/2}/ln t,
/// (t/ln t)^2. Shape only — constants unspecified. Requires t >= 2.
struct ReferenceBounds {
  double lower_classic = 0;  // (t/ln t)^{3/2}
  double lower_process = 0;  // t^{3/2}/ln t
  double upper = 0;          // (t/ln t)^2

  static constexpr const char* kNote = "shape only - constants unspecified";
};

ReferenceBounds reference_bounds(double t);

/// Least-squares line through (ln n, ln value).
struct FitResult {
  double slope = 0;
  double intercept = 0;
  double residual_norm = 0;
  std::size_t points = 0;
};

FitResult fit_exponent(std::span<const std::pair<double, double>> points);

/// Max-degree audit: pass iff max degree <= n^{1/3 + 3 eps^3}.
struct DegreeAudit {
  std::uint32_t max_degree = 0;
  double bound = 0;
  double ratio_to_cuberoot = 0;  // max_degree / n^{1/3}
  bool pass = false;
};

DegreeAudit audit_degrees(const BipartiteGraph& g, double eps);

/// Randomized falsifier for the subset-density bound
/// e(A,B) <= 2 eps^{-3} max{a+b, a b n^{-2/3+3 eps^3}}.
///
/// Seeds a rectangle from a vertex neighborhood, then alternates greedy
/// best-response rounds, scoring every prefix of each side ordered by
/// degree into the other side. Reports the largest violation score found;
/// a score <= 0 means no violation was found at this effort. This is a
/// falsifier, never a verifier.
struct DensityAudit {
  double best_score = 0;
  std::uint64_t best_edges = 0;
  std::size_t best_a = 0;
  std::size_t best_b = 0;
  bool violation_found = false;
};

DensityAudit audit_density(const BipartiteGraph& g, double eps, std::uint32_t effort,
                           std::uint64_t seed = 0x5eedULL);

}  // namespace c4free
