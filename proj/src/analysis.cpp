#include "c4free/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "c4free/rng.hpp"

namespace c4free {

double scaled_time(std::uint32_t n, std::uint64_t step) {
  if (n < 2) throw std::invalid_argument("scaled_time: n must be >= 2");
  const double nn = static_cast<double>(n);
  return std::pow(nn - 1.0, 2.0 / 3.0) * static_cast<double>(step) / (nn * nn);
}

PredictedCurves predicted_curves(std::uint32_t n, double t, double eps) {
  if (t < 0) throw std::invalid_argument("predicted_curves: t must be >= 0");
  const double nn = static_cast<double>(n);
  PredictedCurves c;
  c.q = std::exp(-t * t * t);
  c.open_pred = nn * nn * c.q;
  c.d2_pred = 3.0 * std::pow(nn, 2.0 / 3.0) * t * t * c.q;
  c.envelope = std::pow(nn, 4.0 / 3.0 - 5.0 * eps * eps * eps) * std::exp(t * t * t + t);
  return c;
}

ReferenceBounds reference_bounds(double t) {
  if (t < 2.0) throw std::invalid_argument("reference_bounds: t must be >= 2");
  const double lt = std::log(t);
  ReferenceBounds b;
  b.lower_classic = std::pow(t / lt, 1.5);
  b.lower_process = std::pow(t, 1.5) / lt;
  b.upper = (t / lt) * (t / lt);
  return b;
}

FitResult fit_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("fit_exponent: need at least 2 points");
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [n, value] : points) {
    if (n <= 0 || value <= 0) throw std::invalid_argument("fit_exponent: points must be positive");
    xs.push_back(std::log(n));
    ys.push_back(std::log(value));
  }
  const double sx = std::accumulate(xs.begin(), xs.end(), 0.0);
  const double sy = std::accumulate(ys.begin(), ys.end(), 0.0);
  const double k = static_cast<double>(points.size());
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("fit_exponent: degenerate abscissae");
  FitResult r;
  r.slope = (k * sxy - sx * sy) / denom;
  r.intercept = (sy - r.slope * sx) / k;
  r.points = points.size();
  double rn = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double res = ys[i] - (r.slope * xs[i] + r.intercept);
    rn += res * res;
  }
  r.residual_norm = std::sqrt(rn);
  return r;
}

DegreeAudit audit_degrees(const BipartiteGraph& g, double eps) {
  DegreeAudit a;
  a.max_degree = g.max_degree();
  const double nn = static_cast<double>(g.n());
  a.bound = std::pow(nn, 1.0 / 3.0 + 3.0 * eps * eps * eps);
  a.ratio_to_cuberoot = a.max_degree / std::cbrt(nn);
  a.pass = a.max_degree <= a.bound;
  return a;
}

namespace {

double density_bound(double eps, double a, double b, double n_factor) {
  return 2.0 * std::pow(eps, -3.0) * std::max(a + b, a * b * n_factor);
}

}  // namespace

DensityAudit audit_density(const BipartiteGraph& g, double eps, std::uint32_t effort, std::uint64_t seed) {
  if (eps <= 0) throw std::invalid_argument("audit_density: eps must be positive");
  const std::uint32_t n = g.n();
  const double n_factor = std::pow(static_cast<double>(n), -2.0 / 3.0 + 3.0 * eps * eps * eps);

  DensityAudit audit;  // empty rectangle scores 0
  Rng rng(seed);

  std::vector<std::uint64_t> deg_into(n);
  std::vector<std::uint32_t> order(n);
  std::vector<std::uint32_t> side_a, side_b;

  // Scores every prefix of `order` (sorted by degree into the fixed other
  // side) and keeps the best prefix as the new side.
  auto best_prefix = [&](const std::vector<std::uint32_t>& fixed_other, bool fixed_is_b,
                         std::vector<std::uint32_t>& out) {
    std::fill(deg_into.begin(), deg_into.end(), 0);
    for (std::uint32_t v : fixed_other) {
      const auto& nb = fixed_is_b ? g.neighbors_y(v) : g.neighbors_x(v);
      for (std::uint32_t u : nb) ++deg_into[u];
    }
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t p, std::uint32_t q) { return deg_into[p] > deg_into[q]; });
    const double other_size = static_cast<double>(fixed_other.size());
    std::uint64_t edges = 0;
    double local_best = -1e300;
    std::size_t best_len = 0;
    std::uint64_t best_edges = 0;
    for (std::size_t len = 1; len <= order.size(); ++len) {
      edges += deg_into[order[len - 1]];
      const double score =
          static_cast<double>(edges) - density_bound(eps, static_cast<double>(len), other_size, n_factor);
      if (score > local_best) {
        local_best = score;
        best_len = len;
        best_edges = edges;
      }
    }
    out.assign(order.begin(), order.begin() + best_len);
    const std::size_t a = fixed_is_b ? best_len : fixed_other.size();
    const std::size_t b = fixed_is_b ? fixed_other.size() : best_len;
    if (local_best > audit.best_score) {
      audit.best_score = local_best;
      audit.best_edges = best_edges;
      audit.best_a = a;
      audit.best_b = b;
    }
  };

  for (std::uint32_t restart = 0; restart < effort; ++restart) {
    const std::uint32_t x0 = static_cast<std::uint32_t>(rng.below(n));
    side_b = g.neighbors_x(x0);
    if (side_b.empty()) continue;
    for (int round = 0; round < 3; ++round) {
      best_prefix(side_b, true, side_a);   // choose A against B
      best_prefix(side_a, false, side_b);  // choose B against A
    }
  }

  audit.violation_found = audit.best_score > 0;
  return audit;
}

}  // namespace c4free
