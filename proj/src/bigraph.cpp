#include "c4free/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace c4free {

namespace {

std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

void insert_sorted(std::vector<std::uint32_t>& v, std::uint32_t value) {
  v.insert(std::lower_bound(v.begin(), v.end(), value), value);
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::uint32_t n)
    : n_(n),
      words_((static_cast<std::size_t>(n) + 63) / 64),
      adj_x_(n),
      adj_y_(n),
      bits_x_(static_cast<std::size_t>(n) * words_, 0),
      bits_y_(static_cast<std::size_t>(n) * words_, 0) {
  if (n == 0) throw std::invalid_argument("BipartiteGraph: side size must be >= 1");
}

void BipartiteGraph::check_range(Pair p) const {
  if (p.x >= n_ || p.y >= n_) throw std::out_of_range("BipartiteGraph: vertex index out of range");
}

void BipartiteGraph::add_edge(Pair p) {
  check_range(p);
  if (has_edge(p)) throw std::invalid_argument("BipartiteGraph: duplicate edge");
  insert_sorted(adj_x_[p.x], p.y);
  insert_sorted(adj_y_[p.y], p.x);
  bits_x_[static_cast<std::size_t>(p.x) * words_ + p.y / 64] |= 1ULL << (p.y % 64);
  bits_y_[static_cast<std::size_t>(p.y) * words_ + p.x / 64] |= 1ULL << (p.x % 64);
  ++m_;
  max_degree_ = std::max({max_degree_, deg_x(p.x), deg_y(p.y)});
}

bool BipartiteGraph::has_edge(Pair p) const {
  check_range(p);
  return (bits_x_[static_cast<std::size_t>(p.x) * words_ + p.y / 64] >> (p.y % 64)) & 1ULL;
}

std::span<const std::uint64_t> BipartiteGraph::row_x(std::uint32_t x) const {
  return {bits_x_.data() + static_cast<std::size_t>(x) * words_, words_};
}

std::span<const std::uint64_t> BipartiteGraph::row_y(std::uint32_t y) const {
  return {bits_y_.data() + static_cast<std::size_t>(y) * words_, words_};
}

std::uint32_t BipartiteGraph::codegree_x(std::uint32_t u, std::uint32_t v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("codegree: vertex index out of range");
  if (u == v) throw std::invalid_argument("codegree: vertices must be distinct");
  return static_cast<std::uint32_t>(and_popcount(row_x(u), row_x(v)));
}

std::uint32_t BipartiteGraph::codegree_y(std::uint32_t u, std::uint32_t v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("codegree: vertex index out of range");
  if (u == v) throw std::invalid_argument("codegree: vertices must be distinct");
  return static_cast<std::uint32_t>(and_popcount(row_y(u), row_y(v)));
}

bool BipartiteGraph::verify_k22_free() const {
  // A K_{2,2} is a repeated wedge: two X-vertices sharing two Y-neighbors.
  // Enumerate all wedges (x < x') through each y; a duplicate key means two
  // common neighbors. Cost O(sum deg(y)^2), far below the n^2 pair scan.
  std::vector<std::uint64_t> wedges;
  for (std::uint32_t y = 0; y < n_; ++y) {
    const auto& nb = adj_y_[y];
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        wedges.push_back(static_cast<std::uint64_t>(nb[i]) * n_ + nb[j]);
  }
  std::sort(wedges.begin(), wedges.end());
  return std::adjacent_find(wedges.begin(), wedges.end()) == wedges.end();
}

std::uint64_t BipartiteGraph::rect_edge_count(std::span<const std::uint32_t> a,
                                              std::span<const std::uint32_t> b) const {
  std::vector<std::uint64_t> mask(words_, 0);
  for (std::uint32_t y : b) {
    if (y >= n_) throw std::out_of_range("rect_edge_count: Y index out of range");
    mask[y / 64] |= 1ULL << (y % 64);
  }
  std::uint64_t total = 0;
  for (std::uint32_t x : a) {
    if (x >= n_) throw std::out_of_range("rect_edge_count: X index out of range");
    total += and_popcount(row_x(x), mask);
  }
  return total;
}

void write_graph(std::ostream& out, const BipartiteGraph& g, const std::string& header_comment) {
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  out << g.n() << " " << g.m() << "\n";
  for (std::uint32_t x = 0; x < g.n(); ++x)
    for (std::uint32_t y : g.neighbors_x(x)) out << x << " " << y << "\n";
}

std::string graph_to_string(const BipartiteGraph& g, const std::string& header_comment) {
  std::ostringstream ss;
  write_graph(ss, g, header_comment);
  return ss.str();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

BipartiteGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw std::runtime_error("line 1: missing header");
  std::uint64_t n = 0, m = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m)) parse_fail(lineno, "expected header \"n m\"");
    std::string rest;
    if (hs >> rest) parse_fail(lineno, "trailing tokens after header");
  }
  if (n == 0) parse_fail(lineno, "side size must be >= 1");
  if (n > 65535) parse_fail(lineno, "side size exceeds supported maximum 65535");

  BipartiteGraph g(static_cast<std::uint32_t>(n));
  for (std::uint64_t e = 0; e < m; ++e) {
    if (!next_line()) parse_fail(lineno + 1, "unexpected end of file; expected " + std::to_string(m) + " edges");
    std::istringstream es(line);
    std::int64_t x = -1, y = -1;
    if (!(es >> x >> y)) parse_fail(lineno, "expected edge \"x y\"");
    std::string rest;
    if (es >> rest) parse_fail(lineno, "trailing tokens after edge");
    if (x < 0 || y < 0 || x >= static_cast<std::int64_t>(n) || y >= static_cast<std::int64_t>(n))
      parse_fail(lineno, "edge index out of range");
    const Pair p{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
    if (g.has_edge(p)) parse_fail(lineno, "duplicate edge");
    g.add_edge(p);
  }
  return g;
}

BipartiteGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

}  // namespace c4free
