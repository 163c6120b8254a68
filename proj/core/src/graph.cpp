#include "hlindex/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hl {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for n = " + std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += nb.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& nb : adj_) best = std::max(best, nb.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(order());
  for (const auto& nb : adj_) out.push_back(nb.size());
  return out;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), Vertex{0});
  VertexSet s;
  s.members_ = std::move(m);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  VertexSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::complement(std::size_t n) const { return all(n).minus(*this); }

std::optional<Vertex> SubgraphHandle::to_local(Vertex host_vertex) const {
  auto it = std::lower_bound(to_host.begin(), to_host.end(), host_vertex);
  if (it == to_host.end() || *it != host_vertex) return std::nullopt;
  return static_cast<Vertex>(it - to_host.begin());
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> a, b;
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      (colour[u] == 0 ? a : b).push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return Bipartition{VertexSet(std::move(a)), VertexSet(std::move(b))};
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<std::size_t> distances_from(const Graph& g, const VertexSet& sources) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    dist.at(s) = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t distance(const Graph& g, Vertex u, Vertex v) {
  return distances_from(g, VertexSet{u}).at(v);
}

VertexSet ball(const Graph& g, Vertex v, std::size_t radius) {
  if (v >= g.order()) throw GraphError("ball centre out of range");
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> members{v};
  dist[v] = 0;
  for (std::size_t head = 0; head < members.size(); ++head) {
    Vertex u = members[head];
    if (dist[u] == radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        members.push_back(w);
      }
    }
  }
  return VertexSet(std::move(members));
}

VertexSet neighbors_of_set(const Graph& g, const VertexSet& c) {
  std::vector<Vertex> out;
  for (Vertex v : c) {
    for (Vertex w : g.neighbors(v)) {
      if (!c.contains(w)) out.push_back(w);
    }
  }
  return VertexSet(std::move(out));
}

SubgraphHandle induced_subgraph(const Graph& g, const VertexSet& s) {
  if (!s.within(g.order())) throw GraphError("vertex set exceeds host graph");
  SubgraphHandle h;
  h.vertices = s;
  h.to_host = s.members();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < h.to_host.size(); ++i) {
    for (Vertex w : g.neighbors(h.to_host[i])) {
      auto j = h.to_local(w);
      if (j && i < *j) edges.emplace_back(i, *j);
    }
  }
  h.graph = Graph::from_edge_list(s.size(), edges);
  return h;
}

SubgraphHandle delete_vertices(const Graph& g, const VertexSet& removed) {
  return induced_subgraph(g, removed.complement(g.order()));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[s] = 0;
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] + 1 >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edge_list(a.order() + b.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw GraphError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(g.order(), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(std::size_t p, std::size_t q) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < p; ++i) {
    for (Vertex j = 0; j < q; ++j) edges.emplace_back(i, static_cast<Vertex>(p + j));
  }
  return Graph::from_edge_list(p + q, edges);
}

}  // namespace hl
