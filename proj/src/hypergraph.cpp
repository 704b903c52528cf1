#include "c4free/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "c4free/process.hpp"

namespace c4free {

void Hypergraph::validate() const {
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& e : edges) {
    if (e.size() != r) throw std::invalid_argument("Hypergraph: edge arity != r");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= N) throw std::invalid_argument("Hypergraph: vertex out of range");
      if (i > 0 && e[i] <= e[i - 1]) throw std::invalid_argument("Hypergraph: edge vertices not strictly ascending");
    }
    if (!seen.insert(e).second) throw std::invalid_argument("Hypergraph: duplicate edge");
  }
}

Hypergraph build_k22_hypergraph(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("build_k22_hypergraph: n must be >= 2");
  Hypergraph h;
  h.N = n * n;
  h.r = 4;
  h.edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 * (static_cast<std::size_t>(n) * (n - 1) / 2));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t xp = x + 1; xp < n; ++xp)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t yp = y + 1; yp < n; ++yp)
          h.edges.push_back({x * n + y, x * n + yp, xp * n + y, xp * n + yp});
  return h;
}

namespace {

// Packs up to 3 ascending vertex ids into one 64-bit key. Profile
// enumeration is an oracle path; the id width bounds its reach.
std::uint64_t pack_key(const std::uint32_t* ids, std::uint32_t count, std::uint32_t bits) {
  std::uint64_t key = 0;
  for (std::uint32_t i = 0; i < count; ++i) key = (key << bits) | ids[i];
  return key;
}

}  // namespace

DegreeProfile degree_profile(const Hypergraph& h) {
  if (h.r < 2) throw std::invalid_argument("degree_profile: r must be >= 2");
  DegreeProfile p;
  p.N = h.N;
  p.r = h.r;

  std::vector<std::uint64_t> deg(h.N, 0);
  for (const auto& e : h.edges)
    for (std::uint32_t v : e) ++deg[v];
  p.d_max = h.edges.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  p.d_min = deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());

  std::uint32_t bits = 1;
  while ((1ULL << bits) < h.N) ++bits;
  if (3 * bits > 63) throw std::invalid_argument("degree_profile: vertex ids too wide for enumeration");

  // Delta_l: max number of edges containing a fixed l-set, l = 2..r-1.
  std::vector<std::uint32_t> subset;
  for (std::uint32_t l = 2; l + 1 <= h.r; ++l) {
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    counts.reserve(h.edges.size() * 2);
    for (const auto& e : h.edges) {
      subset.assign(l, 0);
      // Enumerate l-subsets of the (ascending) edge.
      std::vector<std::uint32_t> idx(l);
      for (std::uint32_t i = 0; i < l; ++i) idx[i] = i;
      for (;;) {
        for (std::uint32_t i = 0; i < l; ++i) subset[i] = e[idx[i]];
        ++counts[pack_key(subset.data(), l, bits)];
        std::int32_t k = static_cast<std::int32_t>(l) - 1;
        while (k >= 0 && idx[k] == h.r - l + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (std::uint32_t i = k + 1; i < l; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    std::uint64_t best = 0;
    for (const auto& [key, c] : counts) best = std::max(best, c);
    p.delta[l] = best;
  }

  // Gamma_{r-1}: two r-edges overlap in r-1 vertices iff they share an
  // (r-1)-subset; each then has one private vertex. Group by shared subset
  // and accumulate codegrees of private-vertex pairs.
  {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> groups;  // key -> private ids
    std::vector<std::uint32_t> rest(h.r - 1);
    for (const auto& e : h.edges) {
      for (std::uint32_t drop = 0; drop < h.r; ++drop) {
        std::uint32_t k = 0;
        for (std::uint32_t i = 0; i < h.r; ++i)
          if (i != drop) rest[k++] = e[i];
        if (h.r - 1 <= 3) {
          groups[pack_key(rest.data(), h.r - 1, bits)].push_back(e[drop]);
        } else {
          throw std::invalid_argument("degree_profile: r too large for codegree enumeration");
        }
      }
    }
    std::unordered_map<std::uint64_t, std::uint64_t> codeg;
    for (const auto& [key, privs] : groups) {
      for (std::size_t i = 0; i < privs.size(); ++i)
        for (std::size_t j = i + 1; j < privs.size(); ++j) {
          const std::uint32_t a = std::min(privs[i], privs[j]);
          const std::uint32_t b = std::max(privs[i], privs[j]);
          ++codeg[(static_cast<std::uint64_t>(a) << 32) | b];
        }
    }
    std::uint64_t best = 0;
    for (const auto& [key, c] : codeg) best = std::max(best, c);
    p.gamma[h.r - 1] = best;
  }
  return p;
}

bool BbConditionReport::all_ok() const {
  if (!regular || !d_exceeds_n_eps || !gamma_ok) return false;
  for (const auto& [l, ok] : delta_ok)
    if (!ok) return false;
  return true;
}

BbConditionReport check_bb_conditions(const DegreeProfile& p, double eps) {
  if (eps <= 0) throw std::invalid_argument("check_bb_conditions: eps must be positive");
  BbConditionReport rep;
  rep.regular = (p.d_min == p.d_max);
  rep.d = static_cast<double>(p.d_max);
  rep.n_eps = std::pow(static_cast<double>(p.N), eps);
  rep.d_exceeds_n_eps = rep.d > rep.n_eps;
  const double rm1 = static_cast<double>(p.r) - 1.0;
  for (const auto& [l, value] : p.delta) {
    const double bound = std::pow(rep.d, (static_cast<double>(p.r) - l) / rm1 - eps);
    rep.delta_bound[l] = bound;
    rep.delta_ok[l] = static_cast<double>(value) < bound;
  }
  rep.gamma_bound = std::pow(rep.d, 1.0 - eps);
  const auto it = p.gamma.find(p.r - 1);
  rep.gamma_ok = it != p.gamma.end() && static_cast<double>(it->second) < rep.gamma_bound;
  return rep;
}

GreedyEngine::GreedyEngine(const Hypergraph& h)
    : n_vertices_(h.N),
      edges_(h.edges),
      edge_alive_(h.edges.size(), true),
      incidence_(h.N),
      live_(h.N),
      selected_flag_(h.N, 0),
      dead_(h.N, 0) {
  for (std::size_t eid = 0; eid < edges_.size(); ++eid)
    for (std::uint32_t v : edges_[eid]) incidence_[v].push_back(static_cast<std::uint32_t>(eid));
}

std::uint32_t GreedyEngine::step_at(std::size_t live_index) {
  const std::uint32_t v = live_.at(live_index);
  live_.remove_at(live_index);
  selected_flag_[v] = 1;
  selected_.push_back(v);

  // Rule 1: shrink every edge containing v. Singletons queue deaths, checked
  // within this step before the next selection.
  std::deque<std::uint32_t> queue;
  for (std::uint32_t eid : incidence_[v]) {
    if (!edge_alive_[eid]) continue;
    auto& e = edges_[eid];
    const auto it = std::find(e.begin(), e.end(), v);
    *it = e.back();
    e.pop_back();
    if (e.empty()) throw std::logic_error("GreedyEngine: selection completed an edge");
    if (e.size() == 1) queue.push_back(e.front());
  }

  // Rule 3 with a work queue: a dying vertex takes every edge that contains
  // it out of the hypergraph.
  death_batch_.clear();
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    if (dead_[u] || selected_flag_[u]) continue;
    dead_[u] = 1;
    death_batch_.push_back(u);
    for (std::uint32_t eid : incidence_[u]) edge_alive_[eid] = false;
  }

  std::sort(death_batch_.begin(), death_batch_.end());
  for (std::uint32_t u : death_batch_) live_.remove(u);
  return v;
}

GreedyResult greedy_independent_run(const Hypergraph& h, std::uint64_t seed) {
  GreedyEngine eng(h);
  Rng rng(seed);
  GreedyResult res;
  while (!eng.terminated()) {
    eng.step_at(rng.below(eng.live_count()));
    res.live_after.push_back(eng.live_count());
  }
  res.independent_set = eng.independent_set();
  std::vector<std::uint64_t> deg(h.N, 0);
  for (const auto& e : h.edges)
    for (std::uint32_t v : e) ++deg[v];
  const double d = h.edges.empty() ? 0.0 : static_cast<double>(*std::max_element(deg.begin(), deg.end()));
  if (d > 0 && h.r >= 2)
    res.theory_scale = h.N * std::pow(std::log(static_cast<double>(h.N)) / d, 1.0 / (h.r - 1.0));
  else
    res.theory_scale = h.N;
  return res;
}

EquivalenceResult equivalence_check(std::uint32_t n, std::uint64_t seed, std::uint64_t max_steps) {
  ProcessEngine proc(n, seed);
  GreedyEngine greedy(build_k22_hypergraph(n));
  Rng stream(seed);

  EquivalenceResult res;
  for (;;) {
    if (proc.open_count() != greedy.live_count()) {
      res.first_divergence = static_cast<std::int64_t>(res.steps);
      std::ostringstream ss;
      ss << "pool sizes differ: open=" << proc.open_count() << " live=" << greedy.live_count();
      res.detail = ss.str();
      return res;
    }
    if (proc.open_count() == 0) break;
    if (max_steps != 0 && res.steps >= max_steps) break;

    const std::uint64_t idx = stream.below(proc.open_count());
    const Pair p = proc.step_at(idx);
    const std::uint32_t v = greedy.step_at(idx);
    if (proc.id_of(p) != v) {
      res.first_divergence = static_cast<std::int64_t>(res.steps);
      std::ostringstream ss;
      ss << "selection differs at step " << res.steps << ": engine=(" << p.x << "," << p.y
         << ") greedy=" << v;
      res.detail = ss.str();
      return res;
    }
    ++res.steps;
  }
  res.equal = true;
  return res;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.N << " " << h.r << " " << h.edges.size() << "\n";
  for (const auto& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
}

Hypergraph read_hypergraph(std::istream& in) {
  Hypergraph h;
  std::uint64_t e_count = 0;
  if (!(in >> h.N >> h.r >> e_count)) throw std::runtime_error("hypergraph: malformed header");
  h.edges.reserve(e_count);
  for (std::uint64_t e = 0; e < e_count; ++e) {
    std::vector<std::uint32_t> edge(h.r);
    for (auto& v : edge)
      if (!(in >> v)) throw std::runtime_error("hypergraph: truncated edge list");
    h.edges.push_back(std::move(edge));
  }
  h.validate();
  return h;
}

}  // namespace c4free
