#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "hlindex/canonical.hpp"
#include "hlindex/imbalance.hpp"
#include "hlindex/spectra.hpp"
#include "hlindex/structure.hpp"

namespace hl {
namespace {

constexpr std::size_t kSortChunk = std::size_t{1} << 20;
constexpr std::size_t kPatternCycleMax = 12;
constexpr std::size_t kPathPatternReach = 16;

class Searcher {
 public:
  Searcher(const Graph& g, const Bipartition& bip, Vertex v0, const SearchConfig& cfg,
           SearchResult& result)
      : g_(g), bip_(bip), cfg_(cfg), result_(result), ball_(ball(g, v0, cfg.radius)) {}

  // Returns true once a certificate has been recorded.
  bool run(Vertex v0) {
    return degree_rung() || thick_rung() || (cfg_.use_patterns && pattern_rung()) ||
           exhaustive_rung(v0);
  }

 private:
  bool side_a(Vertex v) const { return bip_.a_side.contains(v); }

  std::uint64_t& counter(Side s) {
    return s == Side::a ? result_.candidates_a : result_.candidates_b;
  }

  bool attempt(const VertexSet& c, const std::string& strategy) {
    if (c.empty() || !c.is_subset_of(ball_)) return false;
    const Side side = side_a(c[0]) ? Side::a : Side::b;
    const VertexSet& own = side == Side::a ? bip_.a_side : bip_.b_side;
    if (!c.is_subset_of(own)) return false;
    std::uint64_t& used = counter(side);
    if (used >= cfg_.budget) {
      result_.budget_exhausted = true;
      return false;
    }
    ++used;
    // On the true bipartition Q = G(C u N(C)).
    const VertexSet q = c.unite(neighbors_of_set(g_, c));
    const Graph qg = induced_subgraph(g_, q).graph;
    const auto approx = eigenvalues_only(qg);
    if (approx[c.size() - 1] > 1.0 + 1e-6) return false;
    if (inertia(qg, Rational(1)).greater + 1 > c.size()) return false;
    const Partition p = side == Side::a ? Partition(bip_) : Partition(bip_.swapped());
    auto cert = increases_imbalance(g_, p, c, side);
    if (!cert) throw std::logic_error("exact Q test passed but no certificate was produced");
    const auto replay = replay_certificate(g_, bip_, *cert);
    if (!replay.ok) throw std::logic_error("certificate failed replay: " + replay.detail);
    result_.certificate = std::move(cert);
    result_.strategy = strategy;
    result_.outcome = SearchOutcome::found;
    return true;
  }

  bool attempt_once(const VertexSet& c, const std::string& strategy) {
    if (!tried_.insert(c).second) return false;
    return attempt(c, strategy);
  }

  bool degree_rung() {
    for (Vertex v : ball_) {
      if (g_.degree(v) <= 1 && attempt_once(VertexSet{v}, "degree")) return true;
    }
    return false;
  }

  bool thick_rung() {
    for (std::size_t rho = 1; rho <= 3; ++rho) {
      for (Vertex u : ball_) {
        const VertexSet grown = ball(g_, u, rho);
        const Thickness t = is_thick(g_, bip_, grown);
        if (t == Thickness::both_fail) continue;
        const VertexSet c = grown.intersect(t == Thickness::a_thick ? bip_.a_side : bip_.b_side);
        if (attempt_once(c, "thick")) return true;
      }
    }
    return false;
  }

  bool classes_of(const std::vector<Vertex>& cycle, const std::string& strategy) {
    std::vector<Vertex> even, odd;
    for (std::size_t i = 0; i < cycle.size(); ++i) (i % 2 == 0 ? even : odd).push_back(cycle[i]);
    return attempt_once(VertexSet(even), strategy) || attempt_once(VertexSet(odd), strategy);
  }

  bool pattern_rung() {
    // Centre plus the vertices at distance two.
    for (Vertex v : ball_) {
      const auto dist = distances_from(g_, VertexSet{v});
      std::vector<Vertex> c{v};
      for (Vertex w = 0; w < g_.order(); ++w) {
        if (dist[w] == 2) c.push_back(w);
      }
      if (attempt_once(VertexSet(c), "pattern:distance-two")) return true;
    }
    // A degree-2 vertex with one vertex two steps away along each of its edges.
    for (Vertex v : ball_) {
      if (g_.degree(v) != 2) continue;
      const Vertex u = g_.neighbors(v)[0];
      const Vertex w = g_.neighbors(v)[1];
      for (Vertex x : g_.neighbors(u)) {
        for (Vertex y : g_.neighbors(w)) {
          if (x == v || y == v || x == y) continue;
          if (attempt_once(VertexSet{v, x, y}, "pattern:short-path")) return true;
        }
      }
    }
    // Alternate classes of induced even cycles, and unions of hexagons.
    std::set<Cycle> seen;
    std::vector<Cycle> hexagons;
    for (std::size_t len = 4; len <= kPatternCycleMax; len += 2) {
      for (Vertex v : ball_) {
        for (auto& cyc : cycles_through(g_, v, len)) {
          if (!seen.insert(cyc).second) continue;
          if (!find_k_chords(g_, SubgraphShape::of_cycle(cyc), 1).empty()) continue;
          if (len == 6) hexagons.push_back(cyc);
          if (classes_of(cyc, "pattern:cycle")) return true;
        }
      }
    }
    for (const auto& d : hexagons) {
      std::set<Vertex> united(d.begin(), d.end());
      for (std::size_t i = 0; i < d.size(); ++i) {
        const Edge e{std::min(d[i], d[(i + 1) % 6]), std::max(d[i], d[(i + 1) % 6])};
        for (const auto& other : cycles_through(g_, e, 6)) {
          std::set<Vertex> pair(d.begin(), d.end());
          pair.insert(other.begin(), other.end());
          united.insert(other.begin(), other.end());
          const VertexSet pv(std::vector<Vertex>(pair.begin(), pair.end()));
          if (attempt_once(pv.intersect(bip_.a_side), "pattern:hexagons") ||
              attempt_once(pv.intersect(bip_.b_side), "pattern:hexagons")) {
            return true;
          }
        }
      }
      const VertexSet uv(std::vector<Vertex>(united.begin(), united.end()));
      if (attempt_once(uv.intersect(bip_.a_side), "pattern:hexagons") ||
          attempt_once(uv.intersect(bip_.b_side), "pattern:hexagons")) {
        return true;
      }
    }
    // Induced paths between same-side degree-2 vertices, taking every other vertex.
    const auto gi = girth(g_);
    if (!gi || *gi >= 6) {
      std::vector<Vertex> ends;
      for (Vertex v : ball_) {
        if (g_.degree(v) == 2) ends.push_back(v);
      }
      for (std::size_t i = 0; i < ends.size(); ++i) {
        const auto dist = distances_from(g_, VertexSet{ends[i]});
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
          const Vertex x = ends[i];
          const Vertex y = ends[j];
          if (side_a(x) != side_a(y) || dist[y] > kPathPatternReach) continue;
          auto path = find_2_induced_path(g_, x, dist[y], x, y);
          if (!path) continue;
          std::vector<Vertex> c;
          for (std::size_t k = 0; k < path->path.size(); k += 2) c.push_back(path->path[k]);
          if (attempt_once(VertexSet(c), "pattern:induced-path")) return true;
        }
      }
    }
    return false;
  }

  // Connected sets in the same-side distance-two graph, anchored at a new vertex.
  bool exhaustive_rung(Vertex v0) {
    const auto dist = distances_from(g_, VertexSet{v0});
    std::size_t previous_size = 0;
    for (std::size_t r = 0; r <= cfg_.radius; ++r) {
      std::vector<Vertex> inside;
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (dist[v] <= r) inside.push_back(v);
      }
      if (r > 0 && inside.size() == previous_size) break;
      previous_size = inside.size();
      result_.radius_reached = r;
      for (std::size_t k = 1; k <= cfg_.max_size; ++k) {
        result_.size_reached = std::max(result_.size_reached, k);
        for (Side side : {Side::a, Side::b}) {
          if (counter(side) >= cfg_.budget) {
            result_.budget_exhausted = true;
            continue;
          }
          if (sweep(side, inside, dist, r, k)) return true;
        }
      }
    }
    return false;
  }

  bool sweep(Side side, const std::vector<Vertex>& inside, const std::vector<std::size_t>& dist,
             std::size_t r, std::size_t k) {
    const VertexSet& own = side == Side::a ? bip_.a_side : bip_.b_side;
    std::vector<Vertex> fresh, old;
    for (Vertex v : inside) {
      if (!own.contains(v)) continue;
      (dist[v] == r ? fresh : old).push_back(v);
    }
    if (fresh.empty()) return false;
    // Local order: fresh vertices first so that anchors are fresh.
    std::vector<Vertex> local = fresh;
    local.insert(local.end(), old.begin(), old.end());
    const std::size_t m = local.size();
    std::vector<std::size_t> index_of(g_.order(), m);
    for (std::size_t i = 0; i < m; ++i) index_of[local[i]] = i;
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (Vertex w : g_.neighbors(local[i])) {
        for (Vertex x : g_.neighbors(w)) {
          if (x != local[i] && index_of[x] < m) adj[i].push_back(index_of[x]);
        }
      }
      std::sort(adj[i].begin(), adj[i].end());
      adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
    }

    std::vector<std::vector<Vertex>> batch;
    bool found = false;
    auto flush = [&]() {
      std::sort(batch.begin(), batch.end());
      for (const auto& c : batch) {
        if (counter(side) >= cfg_.budget) {
          result_.budget_exhausted = true;
          break;
        }
        if (attempt(VertexSet(c), "exhaustive")) {
          found = true;
          break;
        }
      }
      batch.clear();
    };

    std::vector<std::size_t> chosen;
    std::vector<char> in_sub(m, 0);
    std::vector<int> blocked(m, 0);  // chosen or adjacent to a chosen vertex
    std::function<void(std::vector<std::size_t>, std::size_t)> extend =
        [&](std::vector<std::size_t> ext, std::size_t anchor) {
          if (found) return;
          if (chosen.size() == k) {
            std::vector<Vertex> c;
            for (auto i : chosen) c.push_back(local[i]);
            std::sort(c.begin(), c.end());
            batch.push_back(std::move(c));
            if (batch.size() >= kSortChunk) flush();
            return;
          }
          while (!ext.empty() && !found) {
            const std::size_t w = ext.back();
            ext.pop_back();
            std::vector<std::size_t> next = ext;
            for (std::size_t u : adj[w]) {
              if (u > anchor && !blocked[u]) next.push_back(u);
            }
            chosen.push_back(w);
            ++blocked[w];
            for (std::size_t u : adj[w]) ++blocked[u];
            extend(std::move(next), anchor);
            for (std::size_t u : adj[w]) --blocked[u];
            --blocked[w];
            chosen.pop_back();
          }
        };
    for (std::size_t anchor = 0; anchor < fresh.size() && !found; ++anchor) {
      chosen.assign(1, anchor);
      ++blocked[anchor];
      for (std::size_t u : adj[anchor]) ++blocked[u];
      std::vector<std::size_t> ext;
      for (std::size_t u : adj[anchor]) {
        if (u > anchor) ext.push_back(u);
      }
      // Everything below the anchor is excluded from sets anchored here.
      extend(std::move(ext), anchor);
      for (std::size_t u : adj[anchor]) --blocked[u];
      --blocked[anchor];
    }
    if (!found && !batch.empty()) flush();
    return found;
  }

  const Graph& g_;
  const Bipartition& bip_;
  const SearchConfig& cfg_;
  SearchResult& result_;
  VertexSet ball_;
  std::set<VertexSet> tried_;
};

}  // namespace

SearchResult search_increasing_set(const Graph& g, const Bipartition& bip, Vertex v0,
                                   const SearchConfig& cfg) {
  if (v0 >= g.order()) throw std::invalid_argument("start vertex out of range");
  if (!g.is_subcubic()) throw std::invalid_argument("search needs maximum degree at most 3");
  if (!is_bipartite(g)) throw std::invalid_argument("search needs a bipartite graph");
  SearchResult result;
  for (const auto& comp : connected_components(g)) {
    if (comp.contains(v0) && is_heawood(induced_subgraph(g, comp).graph)) {
      result.outcome = SearchOutcome::refused;
      result.reason = "component of the start vertex is the Heawood graph";
      return result;
    }
  }
  Searcher searcher(g, bip, v0, cfg, result);
  if (!searcher.run(v0)) result.outcome = SearchOutcome::exhausted;
  return result;
}

}  // namespace hl
