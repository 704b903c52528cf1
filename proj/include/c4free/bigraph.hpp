#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace c4free {

/// An ordered position (x, y) of K_{n,n}; both indices are 0-based.
struct Pair {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Bipartite graph on X ∪ Y with |X| = |Y| = n.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and n-bit
/// rows for word-AND codegree queries, the hot operation behind the
/// K_{2,2}-freeness criterion. Vertices are dense 0-based indices per side;
/// the graph only ever grows.
class BipartiteGraph {
 public:
  explicit BipartiteGraph(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  std::uint64_t m() const { return m_; }

  /// Inserts (x, y). Throws std::out_of_range for bad indices and
  /// std::invalid_argument for a duplicate edge.
  void add_edge(Pair p);

  bool has_edge(Pair p) const;

  const std::vector<std::uint32_t>& neighbors_x(std::uint32_t x) const { return adj_x_[x]; }
  const std::vector<std::uint32_t>& neighbors_y(std::uint32_t y) const { return adj_y_[y]; }

  std::uint32_t deg_x(std::uint32_t x) const { return static_cast<std::uint32_t>(adj_x_[x].size()); }
  std::uint32_t deg_y(std::uint32_t y) const { return static_cast<std::uint32_t>(adj_y_[y].size()); }
  std::uint32_t max_degree() const { return max_degree_; }

  /// |N(u) ∩ N(u′)| for distinct X-vertices. Throws std::invalid_argument
  /// when u == u′.
  std::uint32_t codegree_x(std::uint32_t u, std::uint32_t v) const;
  std::uint32_t codegree_y(std::uint32_t u, std::uint32_t v) const;

  /// True iff no two X-vertices share two common neighbors (no K_{2,2}).
  bool verify_k22_free() const;

  /// Number of edges in A × B.
  std::uint64_t rect_edge_count(std::span<const std::uint32_t> a,
                                std::span<const std::uint32_t> b) const;

  /// Raw bitset row (n bits) of an X-side vertex; words beyond n are zero.
  std::span<const std::uint64_t> row_x(std::uint32_t x) const;
  std::span<const std::uint64_t> row_y(std::uint32_t y) const;
  std::size_t words_per_row() const { return words_; }

 private:
  void check_range(Pair p) const;

  std::uint32_t n_;
  std::uint64_t m_ = 0;
  std::uint32_t max_degree_ = 0;
  std::size_t words_;
  std::vector<std::vector<std::uint32_t>> adj_x_;
  std::vector<std::vector<std::uint32_t>> adj_y_;
  std::vector<std::uint64_t> bits_x_;  // n rows of `words_` words each
  std::vector<std::uint64_t> bits_y_;
};

/// Text format: optional leading '#' comment lines, then "n m", then m lines
/// "x y" in ascending lexicographic order, LF endings.
struct GraphParseError {
  std::size_t line = 0;
  std::string message;
};

/// Writes the canonical text form. `header_comment`, when non-empty, is
/// emitted first as a '#' line (used by the process history export).
void write_graph(std::ostream& out, const BipartiteGraph& g, const std::string& header_comment = "");
std::string graph_to_string(const BipartiteGraph& g, const std::string& header_comment = "");

/// Parses the text format. Throws std::runtime_error with "line N: ..." on
/// malformed input, duplicate edges, or out-of-range indices.
BipartiteGraph read_graph(std::istream& in);
BipartiteGraph read_graph_file(const std::string& path);

}  // namespace c4free
