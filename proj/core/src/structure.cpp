#include "hlindex/structure.hpp"

#include <algorithm>
#include <functional>

namespace hl {
namespace {

Edge normalised(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

SubgraphShape make_shape(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  SubgraphShape s;
  s.vertices = VertexSet(std::move(vertices));
  for (auto& e : edges) e = normalised(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  s.edges = std::move(edges);
  return s;
}

bool vertex_in(std::span<const Vertex> seq, Vertex v) {
  return std::find(seq.begin(), seq.end(), v) != seq.end();
}

}  // namespace

SubgraphShape SubgraphShape::of_handle(const SubgraphHandle& h) {
  std::vector<Edge> edges;
  for (auto [u, v] : h.graph.edges()) edges.emplace_back(h.to_host[u], h.to_host[v]);
  return make_shape(h.vertices.members(), std::move(edges));
}

SubgraphShape SubgraphShape::of_path(std::span<const Vertex> path) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
  return make_shape({path.begin(), path.end()}, std::move(edges));
}

SubgraphShape SubgraphShape::of_cycle(std::span<const Vertex> cycle) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return make_shape({cycle.begin(), cycle.end()}, std::move(edges));
}

SubgraphShape SubgraphShape::of_union(const SubgraphShape& a, const SubgraphShape& b) {
  std::vector<Vertex> vs = a.vertices.unite(b.vertices).members();
  std::vector<Edge> edges = a.edges;
  edges.insert(edges.end(), b.edges.begin(), b.edges.end());
  return make_shape(std::move(vs), std::move(edges));
}

bool SubgraphShape::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(edges.begin(), edges.end(), normalised(u, v));
}

std::vector<Path> find_k_chords(const Graph& g, const SubgraphShape& h, std::size_t k) {
  std::vector<Path> out;
  if (k == 0) return out;
  if (k == 1) {
    for (Vertex u : h.vertices) {
      for (Vertex w : g.neighbors(u)) {
        if (u < w && h.vertices.contains(w) && !h.has_edge(u, w)) out.push_back({u, w});
      }
    }
    return out;
  }
  Path path;
  std::function<void()> extend = [&] {
    const Vertex last = path.back();
    if (path.size() == k) {
      for (Vertex w : g.neighbors(last)) {
        if (w != path.front() && h.vertices.contains(w) && path.front() < w) {
          Path chord = path;
          chord.push_back(w);
          out.push_back(std::move(chord));
        }
      }
      return;
    }
    for (Vertex w : g.neighbors(last)) {
      if (h.vertices.contains(w) || vertex_in(path, w)) continue;
      path.push_back(w);
      extend();
      path.pop_back();
    }
  };
  for (Vertex u : h.vertices) {
    path.assign(1, u);
    extend();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> find_k_chords(const Graph& g, const SubgraphHandle& h, std::size_t k) {
  return find_k_chords(g, SubgraphShape::of_handle(h), k);
}

bool is_k_induced(const Graph& g, const SubgraphShape& h, std::size_t k) {
  for (std::size_t l = 1; l <= k; ++l) {
    if (!find_k_chords(g, h, l).empty()) return false;
  }
  return true;
}

Cycle canonical_cycle(std::span<const Vertex> cycle) {
  Cycle c(cycle.begin(), cycle.end());
  if (c.size() < 3) return c;
  auto min_it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), min_it, c.end());
  if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

namespace {

void finish_cycles(std::vector<Cycle>& found) {
  for (auto& c : found) c = canonical_cycle(c);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
}

// Extends `path` to `length` vertices whose last vertex is adjacent to path[0].
void close_cycles(const Graph& g, Path& path, std::size_t length,
                  const std::vector<std::size_t>& dist_to_start, std::vector<Cycle>& found) {
  const Vertex last = path.back();
  if (path.size() == length) {
    if (g.has_edge(last, path.front())) found.push_back(path);
    return;
  }
  for (Vertex w : g.neighbors(last)) {
    if (vertex_in(path, w)) continue;
    // After adding w the path has path.size() edges; length - path.size() edges remain.
    if (dist_to_start[w] == kUnreachable || dist_to_start[w] > length - path.size()) continue;
    path.push_back(w);
    close_cycles(g, path, length, dist_to_start, found);
    path.pop_back();
  }
}

}  // namespace

std::vector<Cycle> cycles_through(const Graph& g, Vertex anchor, std::size_t length) {
  if (length < 3) throw GraphError("cycle length must be at least 3");
  std::vector<Cycle> found;
  const auto dist = distances_from(g, VertexSet{anchor});
  Path path{anchor};
  close_cycles(g, path, length, dist, found);
  finish_cycles(found);
  return found;
}

std::vector<Cycle> cycles_through(const Graph& g, Edge anchor, std::size_t length) {
  if (length < 3) throw GraphError("cycle length must be at least 3");
  if (!g.has_edge(anchor.first, anchor.second)) throw GraphError("anchor is not an edge");
  std::vector<Cycle> found;
  const auto dist = distances_from(g, VertexSet{anchor.first});
  Path path{anchor.first, anchor.second};
  close_cycles(g, path, length, dist, found);
  finish_cycles(found);
  return found;
}

bool is_internal_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.first, e.second)) {
    throw GraphError("(" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                     ") is not an edge");
  }
  return !cycles_through(g, e, 6).empty();
}

bool is_good_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 4 || len % 2 != 0) throw GraphError("good cycle test needs an even cycle");
  const VertexSet on_cycle(std::vector<Vertex>(cycle.begin(), cycle.end()));
  if (on_cycle.size() != len) throw GraphError("cycle repeats a vertex");
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % len])) throw GraphError("not a cycle of the graph");
  }
  if (!find_k_chords(g, SubgraphShape::of_cycle(cycle), 1).empty()) {
    throw GraphError("cycle is not induced");
  }
  auto class_is_clean = [&](std::size_t parity) {
    std::vector<Vertex> cls;
    for (std::size_t i = parity; i < len; i += 2) cls.push_back(cycle[i]);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        for (Vertex w : g.neighbors(cls[i])) {
          if (!on_cycle.contains(w) && g.has_edge(w, cls[j])) return false;
        }
      }
    }
    return true;
  };
  return class_is_clean(0) || class_is_clean(1);
}

Thickness is_thick(const Graph& g, const Bipartition& bip, const VertexSet& u) {
  auto holds = [&](const VertexSet& side, const VertexSet& other) {
    const VertexSet inside = u.intersect(side);
    if (inside.size() <= u.intersect(other).size()) return false;
    for (Vertex x : inside) {
      std::size_t outside = 0;
      for (Vertex w : g.neighbors(x)) outside += u.contains(w) ? 0 : 1;
      if (outside > 1) return false;
    }
    for (Vertex w : other) {
      if (u.contains(w)) continue;
      std::size_t into = 0;
      for (Vertex x : g.neighbors(w)) into += u.contains(x) ? 1 : 0;
      if (into > 1) return false;
    }
    return true;
  };
  if (holds(bip.a_side, bip.b_side)) return Thickness::a_thick;
  if (holds(bip.b_side, bip.a_side)) return Thickness::b_thick;
  return Thickness::both_fail;
}

namespace {

// Walks from `from` to `to` along a shortest path, choosing the smallest
// admissible neighbour at each step.
Path shortest_walk(const Graph& g, Vertex from, Vertex to) {
  const auto dist_to = distances_from(g, VertexSet{to});
  Path path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : g.neighbors(cur)) {
      if (dist_to[w] + 1 == dist_to[cur]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

// Vertices lying on some shortest path from x to the BFS root.
std::vector<bool> shortest_path_ancestors(const Graph& g, const std::vector<std::size_t>& dist,
                                          Vertex x) {
  std::vector<bool> mark(g.order(), false);
  std::vector<Vertex> frontier{x};
  mark[x] = true;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Vertex u = frontier[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] + 1 == dist[u] && !mark[w]) {
        mark[w] = true;
        frontier.push_back(w);
      }
    }
  }
  return mark;
}

bool two_induced(const Graph& g, const Path& p) {
  return is_k_induced(g, SubgraphShape::of_path(p), 2);
}

std::optional<Path> exhaustive_two_induced(const Graph& g, const VertexSet& allowed, Vertex x,
                                           Vertex y) {
  std::size_t budget = 2'000'000;
  Path path{x};
  std::function<bool(std::size_t)> dfs = [&](std::size_t target_len) -> bool {
    if (budget == 0) return false;
    --budget;
    if (path.size() == target_len + 1) return path.back() == y && two_induced(g, path);
    if (path.back() == y) return false;
    for (Vertex w : g.neighbors(path.back())) {
      if (!allowed.contains(w) || vertex_in(path, w)) continue;
      path.push_back(w);
      if (dfs(target_len)) return true;
      path.pop_back();
    }
    return false;
  };
  for (std::size_t len = 1; len < allowed.size() && budget > 0; ++len) {
    path.assign(1, x);
    if (dfs(len)) return path;
  }
  return std::nullopt;
}

}  // namespace

std::optional<InducedPath> find_2_induced_path(const Graph& g, Vertex v0, std::size_t r, Vertex x,
                                               Vertex y) {
  const std::size_t n = g.order();
  if (v0 >= n || x >= n || y >= n) return std::nullopt;
  if (!is_bipartite(g)) return std::nullopt;
  if (auto gi = girth(g); gi && *gi < 6) return std::nullopt;
  const auto dist = distances_from(g, VertexSet{v0});
  if (dist[x] > r || dist[y] > r) return std::nullopt;
  if (x == y) return InducedPath{{x}, false, false};

  InducedPath result;
  const auto anc_x = shortest_path_ancestors(g, dist, x);
  const auto anc_y = shortest_path_ancestors(g, dist, y);
  std::optional<Vertex> meet;
  for (Vertex v = 0; v < n; ++v) {
    if (!anc_x[v] || !anc_y[v]) continue;
    if (!meet || dist[v] > dist[*meet]) {
      meet = v;
    } else if (dist[v] == dist[*meet]) {
      result.ambiguous_meeting_point = true;
    }
  }
  const VertexSet allowed = ball(g, v0, r + 1);
  auto accept = [&](const Path& p) {
    return std::all_of(p.begin(), p.end(), [&](Vertex v) { return allowed.contains(v); }) &&
           two_induced(g, p);
  };

  const Vertex z = *meet;  // v0 is always a common ancestor
  Path px = shortest_walk(g, x, z);
  Path py = shortest_walk(g, y, z);
  Path pxy = px;
  for (auto it = py.rbegin() + 1; it != py.rend(); ++it) pxy.push_back(*it);
  if (accept(pxy)) {
    result.path = std::move(pxy);
    return result;
  }

  // Repair along the 2-chord u-w-v whose x-side end is farthest from z.
  const auto dist_z = distances_from(g, VertexSet{z});
  const VertexSet x_side(std::vector<Vertex>(px.begin(), px.end() - 1));
  const VertexSet y_side(std::vector<Vertex>(py.begin(), py.end() - 1));
  std::optional<Path> best_chord;
  for (const Path& chord : find_k_chords(g, SubgraphShape::of_path(pxy), 2)) {
    Path c = chord;
    if (!x_side.contains(c.front())) std::reverse(c.begin(), c.end());
    if (!x_side.contains(c.front()) || !y_side.contains(c.back())) continue;
    if (!best_chord || dist_z[c.front()] > dist_z[best_chord->front()]) best_chord = c;
  }
  if (best_chord) {
    const Vertex u = best_chord->front();
    const Vertex v = best_chord->back();
    Path repaired;
    for (Vertex p : px) {
      repaired.push_back(p);
      if (p == u) break;
    }
    repaired.push_back((*best_chord)[1]);
    auto vy = std::find(py.begin(), py.end(), v);
    for (auto it = std::make_reverse_iterator(vy + 1); it != py.rend(); ++it) {
      repaired.push_back(*it);
    }
    if (accept(repaired)) {
      result.path = std::move(repaired);
      return result;
    }
  }

  result.used_fallback = true;
  if (auto p = exhaustive_two_induced(g, allowed, x, y)) {
    result.path = std::move(*p);
    return result;
  }
  return std::nullopt;
}

}  // namespace hl
