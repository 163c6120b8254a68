#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hl {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; every accessor is const.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
  /// and out-of-range endpoints throw GraphError.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph empty(std::size_t n) { return from_edge_list(n, std::span<const Edge>{}); }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  std::size_t max_degree() const noexcept;
  bool is_subcubic() const noexcept { return max_degree() <= 3; }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  static VertexSet all(std::size_t n);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  /// True when every member is < n.
  bool within(std::size_t n) const noexcept { return members_.empty() || members_.back() < n; }
  bool is_subset_of(const VertexSet& other) const;

  VertexSet unite(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  /// Complement inside 0..n-1.
  VertexSet complement(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Ordered 2-colouring. In canonical form the side holding the lowest vertex
/// of every connected component is a_side.
struct Bipartition {
  VertexSet a_side;
  VertexSet b_side;

  Bipartition swapped() const { return {b_side, a_side}; }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Induced subgraph with the map from induced indices back to host indices.
struct SubgraphHandle {
  VertexSet vertices;
  Graph graph;
  std::vector<Vertex> to_host;

  std::optional<Vertex> to_local(Vertex host_vertex) const;
};

std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Vertices at distance <= radius from v.
VertexSet ball(const Graph& g, Vertex v, std::size_t radius);

/// BFS distances from a source set; unreachable vertices get kUnreachable.
inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::size_t> distances_from(const Graph& g, const VertexSet& sources);
std::size_t distance(const Graph& g, Vertex u, Vertex v);

/// N(C): vertices outside C with a neighbour in C.
VertexSet neighbors_of_set(const Graph& g, const VertexSet& c);

SubgraphHandle induced_subgraph(const Graph& g, const VertexSet& s);
/// G minus the given vertices, as a handle.
SubgraphHandle delete_vertices(const Graph& g, const VertexSet& removed);

/// Components sorted by their minimum vertex, each sorted ascending.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Relabels vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t p, std::size_t q);

}  // namespace hl
