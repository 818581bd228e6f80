#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcdom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted set of vertex ids without duplicates.
///
/// Construction from an arbitrary list sorts and deduplicates. Range checks
/// against a particular graph are done by check_range().
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  /// {0, 1, ..., n-1}
  static VertexSet all(std::size_t n);

  bool contains(Vertex v) const;
  void insert(Vertex v);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t k) const { return ids_[k]; }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Every adjacency list is strictly increasing, symmetric and free of
/// self-loops. Parallel edges passed to from_edges() collapse into one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws RangeError for an endpoint >= n and ValidationError for a
  /// self-loop. Duplicates (in either orientation) are dropped.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Re-checks every representation invariant; throws ValidationError.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

// Edge-list text format:
//   c <comment>
//   p ds <n> <m>
//   e <u> <v>      (exactly m lines)
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
std::string serialize_graph(const Graph& g);

/// Throws RangeError if some id is >= g.num_vertices().
void check_range(const Graph& g, const VertexSet& s);
void check_range(const Graph& g, Vertex v);

/// N[v]: v together with its neighbours.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// True iff every target lies in N[d] for some member of d.
bool is_dominating(const Graph& g, const VertexSet& d, const VertexSet& targets);

/// Targets not dominated by d, in increasing order.
VertexSet undominated(const Graph& g, const VertexSet& d, const VertexSet& targets);

}  // namespace bcdom
