#include "hlindex/canonical.hpp"

#include <algorithm>

#include "hlindex/generators.hpp"
#include "hlindex/io.hpp"

namespace hl {
namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Refines to the coarsest equitable partition below `cells`. Split pieces are
// ordered by their neighbour count into the splitter, so the result depends
// only on the ordered partition and not on vertex names.
void refine(const Graph& g, Cells& cells) {
  const std::size_t n = g.order();
  std::vector<unsigned> count(n);
  std::vector<char> in_splitter(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::fill(in_splitter.begin(), in_splitter.end(), 0);
      for (Vertex v : cells[s]) in_splitter[v] = 1;
      for (Vertex v = 0; v < n; ++v) {
        unsigned c = 0;
        for (Vertex w : g.neighbors(v)) c += in_splitter[w];
        count[v] = c;
      }
      Cells next;
      next.reserve(cells.size() + 1);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::stable_sort(cell.begin(), cell.end(),
                         [&](Vertex a, Vertex b) { return count[a] < count[b]; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() || count[cell[i]] != count[cell[start]]) {
            next.emplace_back(cell.begin() + start, cell.begin() + i);
            start = i;
          }
        }
        if (next.back().size() != cell.size()) changed = true;
      }
      cells = std::move(next);
    }
  }
}

struct Search {
  const Graph& g;
  std::string best;
  std::vector<Vertex> best_labels;

  void leaf(const Cells& cells) {
    std::vector<Vertex> labels(g.order());
    for (std::size_t i = 0; i < cells.size(); ++i) labels[cells[i][0]] = static_cast<Vertex>(i);
    std::string code = graph6_encode(relabel(g, labels));
    if (best_labels.empty() || code < best) {
      best = std::move(code);
      best_labels = std::move(labels);
    }
  }

  void descend(Cells cells) {
    refine(g, cells);
    if (cells.size() == g.order()) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) {
        target = i;
      }
    }
    for (Vertex v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[i]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      descend(std::move(child));
    }
  }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  Cells cells;
  const std::size_t top = g.max_degree();
  for (std::size_t d = 0; d <= top; ++d) {
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == d) cell.push_back(v);
    }
    if (!cell.empty()) cells.push_back(std::move(cell));
  }
  Search search{g, {}, {}};
  search.descend(std::move(cells));
  return search.best_labels;
}

std::string canonical_form(const Graph& g) {
  return graph6_encode(relabel(g, canonical_labeling(g)));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degree_sequence();
  auto db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_heawood(const Graph& g) {
  if (g.order() != 14 || g.edge_count() != 21) return false;
  for (Vertex v = 0; v < 14; ++v) {
    if (g.degree(v) != 3) return false;
  }
  if (!is_bipartite(g) || girth(g) != std::optional<std::size_t>{6}) return false;
  static const std::string reference = canonical_form(heawood());
  return canonical_form(g) == reference;
}

}  // namespace hl
