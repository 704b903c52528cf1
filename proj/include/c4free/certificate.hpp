#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c4free/bigraph.hpp"

#include <json.hpp>

namespace c4free {

class ProcessEngine;

/// Witness of a completed run: the edge list, a from-scratch K_{2,2}-freeness
/// check, and a bipartite independence bound. The Ramsey claim
/// "b(2, beta+1) > n" is emitted only when beta is exact.
struct Certificate {
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  std::string rng_algo;
  std::uint64_t m = 0;
  std::vector<Pair> edges;
  bool k22_free = false;
  std::uint32_t beta = 0;
  bool beta_exact = false;
  std::optional<std::string> claim;
  double epsilon = 0;
  std::string tool_version;
};

/// Builds a certificate from a run that reached completion. Throws
/// std::logic_error if the process has open pairs left and
/// std::runtime_error if the from-scratch check finds a K_{2,2} (an engine
/// bug by construction).
Certificate make_certificate(const ProcessEngine& eng, std::uint32_t exact_limit, double epsilon,
                             std::uint32_t heuristic_restarts, std::uint64_t heuristic_seed);

std::string render_claim(std::uint32_t beta, std::uint32_t n);

nlohmann::ordered_json certificate_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace c4free
