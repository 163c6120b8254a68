#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hlindex/graph.hpp"

namespace hl {

/// Vertex sequence; consecutive entries are adjacent.
using Path = std::vector<Vertex>;
/// Closed walk without repetition, stored without repeating the start.
using Cycle = std::vector<Vertex>;

/// A subgraph given by its vertices and its own edges (not necessarily induced).
struct SubgraphShape {
  VertexSet vertices;
  std::vector<Edge> edges;  // normalised u < v, sorted

  static SubgraphShape of_handle(const SubgraphHandle& h);
  static SubgraphShape of_path(std::span<const Vertex> path);
  static SubgraphShape of_cycle(std::span<const Vertex> cycle);
  static SubgraphShape of_union(const SubgraphShape& a, const SubgraphShape& b);
  bool has_edge(Vertex u, Vertex v) const;
};

/// Paths P = p0..pk of length k with P meeting H exactly in {p0, pk}.
/// For k = 1 these are the edges of G between H vertices that are not edges of H.
/// Each chord is reported once, oriented so that front() < back().
std::vector<Path> find_k_chords(const Graph& g, const SubgraphShape& h, std::size_t k);
std::vector<Path> find_k_chords(const Graph& g, const SubgraphHandle& h, std::size_t k);

/// No l-chords for l = 1..k.
bool is_k_induced(const Graph& g, const SubgraphShape& h, std::size_t k);

struct InducedPath {
  Path path;
  /// Set when the constructive recipe did not settle the path and the
  /// exhaustive search inside the ball was used instead.
  bool used_fallback = false;
  /// Several deepest common ancestors existed; the smallest index was taken.
  bool ambiguous_meeting_point = false;
};

/// 2-induced path from x to y inside ball(v0, r + 1) for bipartite graphs of
/// girth >= 6. Built from two shortest paths to v0 with the longest common
/// tail, repaired along one 2-chord if needed. Returns nullopt when the
/// preconditions fail.
std::optional<InducedPath> find_2_induced_path(const Graph& g, Vertex v0, std::size_t r, Vertex x,
                                               Vertex y);

enum class Thickness { a_thick, b_thick, both_fail };

Thickness is_thick(const Graph& g, const Bipartition& bip, const VertexSet& u);

/// Distinct cycles of exactly `length` through the anchor, each in canonical
/// form (rotated to its minimum vertex, direction with the smaller second
/// vertex), sorted.
std::vector<Cycle> cycles_through(const Graph& g, Vertex anchor, std::size_t length);
std::vector<Cycle> cycles_through(const Graph& g, Edge anchor, std::size_t length);
Cycle canonical_cycle(std::span<const Vertex> cycle);

/// Edge on some 6-cycle. Throws GraphError when e is not an edge.
bool is_internal_edge(const Graph& g, Edge e);

/// Induced even cycle where one of the two alternate classes has no pair
/// 2-adjacent through a vertex off the cycle. Throws GraphError when the
/// cycle is odd, not a cycle of g, or not induced.
bool is_good_cycle(const Graph& g, std::span<const Vertex> cycle);

}  // namespace hl
