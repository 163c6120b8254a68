#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "hlindex/graph.hpp"

namespace hl {

/// Fano-plane incidence graph: points 0..6, line i = {i, i+1, i+3} mod 7 is
/// vertex 7 + i.
Graph heawood();

struct GeneratorConfig {
  std::size_t n = 14;
  std::uint64_t seed = 1;
  bool connected = true;
  /// Every cycle has at least this length when set.
  std::optional<std::size_t> girth_floor;
  /// Edges added on top of the spanning tree; random in [0, n/2] when unset.
  std::optional<std::size_t> extra_edges;
  /// Keep adding edges until no admissible pair remains; overrides extra_edges.
  bool saturate = false;
};

/// Seeded bipartite graph with maximum degree 3: a random spanning tree plus
/// extra edges between opposite sides that respect the degree cap and the
/// girth floor. Output depends only on the config, on every platform.
Graph random_bipartite_subcubic(const GeneratorConfig& cfg);

/// Uniform integer in [0, bound) from a 64-bit engine by rejection, so the
/// stream does not depend on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

inline constexpr std::size_t kEnumerationLimit = 14;

/// Connected bipartite graphs with maximum degree 3, one per isomorphism class,
/// for n = 1..n_max, grouped by order and sorted by canonical form within
/// each order. Each graph is returned in canonical labelling. Throws
/// std::invalid_argument when n_max exceeds kEnumerationLimit.
void enumerate_bipartite_subcubic(std::size_t n_max,
                                  const std::function<void(const Graph&)>& visit);
std::vector<std::vector<Graph>> enumerate_by_order(std::size_t n_max);

}  // namespace hl
