#include "hlindex/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "hlindex/canonical.hpp"
#include "hlindex/io.hpp"

namespace hl {

Graph heawood() {
  std::vector<Edge> edges;
  for (Vertex line = 0; line < 7; ++line) {
    for (Vertex offset : {0u, 1u, 3u}) edges.emplace_back((line + offset) % 7, 7 + line);
  }
  return Graph::from_edge_list(14, edges);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Graph random_bipartite_subcubic(const GeneratorConfig& cfg) {
  const std::size_t n = cfg.n;
  if (n == 0) throw std::invalid_argument("generator needs n >= 1");
  if (cfg.girth_floor && *cfg.girth_floor < 3) {
    throw std::invalid_argument("girth floor below 3 is meaningless");
  }
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<int> side(n, 0);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> open;
    for (Vertex u = 0; u < v; ++u) {
      if (adj[u].size() < 3) open.push_back(u);
    }
    const Vertex u = open[uniform_below(rng, open.size())];
    adj[u].push_back(v);
    adj[v].push_back(u);
    side[v] = 1 - side[u];
    edges.emplace_back(u, v);
  }
  auto admissible = [&](Vertex u, Vertex v) {
    if (side[u] == side[v] || adj[u].size() >= 3 || adj[v].size() >= 3) return false;
    return std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end();
  };
  auto long_enough = [&](std::size_t d) { return !cfg.girth_floor || d + 1 >= *cfg.girth_floor; };
  auto add = [&](Vertex u, Vertex v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    edges.emplace_back(u, v);
  };
  if (cfg.saturate) {
    while (true) {
      std::vector<Edge> open;
      const Graph current = Graph::from_edge_list(n, edges);
      for (Vertex u = 0; u < n; ++u) {
        if (adj[u].size() >= 3) continue;
        const auto dist = distances_from(current, VertexSet{u});
        for (Vertex v = u + 1; v < n; ++v) {
          if (admissible(u, v) && long_enough(dist[v])) open.emplace_back(u, v);
        }
      }
      if (open.empty()) break;
      const auto [u, v] = open[uniform_below(rng, open.size())];
      add(u, v);
    }
  } else {
    const std::size_t wanted = cfg.extra_edges ? *cfg.extra_edges : uniform_below(rng, n / 2 + 1);
    const std::size_t attempts = 50 * (wanted + 1) * n;
    std::size_t added = 0;
    for (std::size_t a = 0; a < attempts && added < wanted; ++a) {
      const auto u = static_cast<Vertex>(uniform_below(rng, n));
      const auto v = static_cast<Vertex>(uniform_below(rng, n));
      if (!admissible(u, v)) continue;
      if (!long_enough(distance(Graph::from_edge_list(n, edges), u, v))) continue;
      add(u, v);
      ++added;
    }
    if (cfg.extra_edges && added < wanted) {
      throw std::invalid_argument("could not place " + std::to_string(wanted) +
                                  " extra edges under the degree and girth constraints");
    }
  }
  if (!cfg.connected && n > 2) {
    // Cut a few tree edges; the result may still happen to be connected.
    const std::size_t cuts = 1 + uniform_below(rng, 2);
    for (std::size_t c = 0; c < cuts && edges.size() > 1; ++c) {
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, n - 1 - c)));
    }
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  return relabel(Graph::from_edge_list(n, edges), perm);
}

std::vector<std::vector<Graph>> enumerate_by_order(std::size_t n_max) {
  if (n_max > kEnumerationLimit) {
    throw std::invalid_argument("enumeration is capped at n = " +
                                std::to_string(kEnumerationLimit));
  }
  std::vector<std::vector<Graph>> levels;
  if (n_max == 0) return levels;
  levels.push_back({Graph::empty(1)});
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::vector<std::pair<std::string, Graph>> found;
    std::unordered_set<std::string> seen;
    for (const Graph& parent : levels.back()) {
      const auto bip = *bipartition(parent);
      const auto base = parent.edges();
      for (const VertexSet* side : {&bip.a_side, &bip.b_side}) {
        std::vector<Vertex> open;
        for (Vertex v : *side) {
          if (parent.degree(v) < 3) open.push_back(v);
        }
        const std::size_t k = open.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
          if (std::popcount(mask) > 3) continue;
          auto edges = base;
          for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1u << i)) edges.emplace_back(open[i], static_cast<Vertex>(n - 1));
          }
          const Graph child = Graph::from_edge_list(n, edges);
          const auto labels = canonical_labeling(child);
          Graph canon = relabel(child, labels);
          std::string code = graph6_encode(canon);
          if (seen.insert(code).second) found.emplace_back(std::move(code), std::move(canon));
        }
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> level;
    level.reserve(found.size());
    for (auto& [code, g] : found) level.push_back(std::move(g));
    levels.push_back(std::move(level));
  }
  return levels;
}

void enumerate_bipartite_subcubic(std::size_t n_max,
                                  const std::function<void(const Graph&)>& visit) {
  for (const auto& level : enumerate_by_order(n_max)) {
    for (const auto& g : level) visit(g);
  }
}

}  // namespace hl
