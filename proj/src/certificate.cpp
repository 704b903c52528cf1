#include "c4free/certificate.hpp"

#include <stdexcept>

#include "c4free/independence.hpp"
#include "c4free/process.hpp"
#include "c4free/version.hpp"

namespace c4free {

std::string render_claim(std::uint32_t beta, std::uint32_t n) {
  return "b(2," + std::to_string(beta + 1) + ") > " + std::to_string(n);
}

Certificate make_certificate(const ProcessEngine& eng, std::uint32_t exact_limit, double epsilon,
                             std::uint32_t heuristic_restarts, std::uint64_t heuristic_seed) {
  if (!eng.terminated()) throw std::logic_error("make_certificate: process not run to completion");

  Certificate c;
  c.n = eng.n();
  c.seed = eng.seed();
  c.rng_algo = ProcessEngine::rng_algo();
  c.m = eng.graph().m();
  for (std::uint32_t x = 0; x < c.n; ++x)
    for (std::uint32_t y : eng.graph().neighbors_x(x)) c.edges.push_back({x, y});

  c.k22_free = eng.graph().verify_k22_free();
  if (!c.k22_free)
    throw std::runtime_error("make_certificate: final graph contains a K_{2,2}; engine bug");

  c.beta_exact = c.n <= exact_limit;
  c.beta = c.beta_exact ? bip_independence_exact(eng.graph(), exact_limit)
                        : bip_independence_heuristic(eng.graph(), heuristic_restarts, heuristic_seed);
  if (c.beta_exact) c.claim = render_claim(c.beta, c.n);
  c.epsilon = epsilon;
  c.tool_version = kToolVersion;
  return c;
}

nlohmann::ordered_json certificate_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["seed"] = c.seed;
  j["rng_algo"] = c.rng_algo;
  j["m"] = c.m;
  auto edges = nlohmann::ordered_json::array();
  for (const Pair& p : c.edges) edges.push_back({p.x, p.y});
  j["edges"] = std::move(edges);
  j["k22_free"] = c.k22_free;
  j["beta"] = c.beta;
  j["beta_flag"] = c.beta_exact ? "exact" : "heuristic-lower-bound";
  if (c.claim) j["claim"] = *c.claim;
  j["epsilon"] = c.epsilon;
  j["tool_version"] = c.tool_version;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.n = j.at("n").get<std::uint32_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.rng_algo = j.at("rng_algo").get<std::string>();
  c.m = j.at("m").get<std::uint64_t>();
  for (const auto& e : j.at("edges"))
    c.edges.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()});
  c.k22_free = j.at("k22_free").get<bool>();
  c.beta = j.at("beta").get<std::uint32_t>();
  c.beta_exact = j.at("beta_flag").get<std::string>() == "exact";
  if (j.contains("claim")) c.claim = j.at("claim").get<std::string>();
  c.epsilon = j.at("epsilon").get<double>();
  c.tool_version = j.at("tool_version").get<std::string>();
  return c;
}

}  // namespace c4free
