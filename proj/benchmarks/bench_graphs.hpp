#pragma once

#include "hlindex/generators.hpp"

namespace hl::bench {

inline Graph random_graph(std::size_t n, std::uint64_t seed = 7) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.saturate = true;
  return random_bipartite_subcubic(cfg);
}

}  // namespace hl::bench
