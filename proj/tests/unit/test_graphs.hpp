#pragma once

#include <random>
#include <vector>

#include "hlindex/generators.hpp"
#include "hlindex/graph.hpp"

namespace hl::testing {

inline Graph c6() { return cycle_graph(6); }

// The 8-cycle 1..8 (vertices 0..7) with vertex 11 (8) on 2 and 6 and vertex 12 (9) on 1 and 5.
inline Graph h0() {
  return Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                                    {8, 1}, {8, 5}, {9, 0}, {9, 4}});
}

inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

inline Graph shuffled(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(g.order());
  for (Vertex i = 0; i < g.order(); ++i) perm[i] = i;
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  return relabel(g, perm);
}

// Union of three random perfect matchings between {0..k-1} and {k..2k-1},
// redrawn until simple, connected and of girth >= girth_min.
inline Graph random_cubic_bipartite(std::size_t k, std::uint64_t seed, std::size_t girth_min) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<Edge> edges;
    for (int m = 0; m < 3; ++m) {
      std::vector<Vertex> p(k);
      for (Vertex i = 0; i < k; ++i) p[i] = i;
      for (std::size_t i = k; i > 1; --i) std::swap(p[i - 1], p[uniform_below(rng, i)]);
      for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, static_cast<Vertex>(k + p[i]));
    }
    auto g = Graph::from_edge_list(2 * k, edges);
    if (g.edge_count() != 3 * k || !is_connected(g)) continue;
    if (auto gi = girth(g); gi && *gi < girth_min) continue;
    return g;
  }
}

}  // namespace hl::testing
