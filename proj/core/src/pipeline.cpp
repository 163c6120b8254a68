#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "hlindex/imbalance.hpp"

namespace hl {

std::vector<Vertex> separated_set(const Graph& g, std::size_t separation) {
  std::vector<Vertex> chosen;
  std::vector<std::size_t> nearest(g.order(), kUnreachable);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (nearest[v] != kUnreachable && nearest[v] < separation) continue;
    chosen.push_back(v);
    const auto dist = distances_from(g, VertexSet{v});
    for (Vertex w = 0; w < g.order(); ++w) nearest[w] = std::min(nearest[w], dist[w]);
  }
  return chosen;
}

PipelineReport fraction_pipeline(const Graph& g, const PipelineConfig& cfg) {
  if (!g.is_subcubic()) throw std::invalid_argument("pipeline needs maximum degree at most 3");
  const auto bip_opt = bipartition(g);
  if (!bip_opt) throw std::invalid_argument("pipeline needs a bipartite graph");
  const Bipartition& bip = *bip_opt;

  PipelineReport rep;
  rep.separation = cfg.separation;
  rep.radius = cfg.search.radius;
  rep.conforming = cfg.separation >= 38 && cfg.search.radius <= 17;
  rep.epsilon = Rational(1, Integer(1) << 40);
  rep.delta = rep.epsilon / 2;
  rep.v0_set = separated_set(g, cfg.separation);

  rep.outcomes.resize(rep.v0_set.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < rep.v0_set.size(); i = next++) {
      rep.outcomes[i].v = rep.v0_set[i];
      rep.outcomes[i].result = search_increasing_set(g, bip, rep.v0_set[i], cfg.search);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, rep.v0_set.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  // Keep moved sets pairwise at distance >= 4, in V0 order.
  std::vector<VertexSet> kept;
  VertexSet moved_a, moved_b;
  for (auto& out : rep.outcomes) {
    if (!out.result.certificate) {
      ++rep.failures;
      continue;
    }
    const VertexSet& c = out.result.certificate->c_set;
    const auto dist = distances_from(g, c);
    bool far = true;
    for (const auto& other : kept) {
      for (Vertex w : other) far = far && dist[w] >= 4;
    }
    if (!far) {
      out.dropped = true;
      ++rep.failures;
      continue;
    }
    kept.push_back(c);
    if (out.result.certificate->side == Side::a) {
      ++rep.a;
      moved_a = moved_a.unite(c);
    } else {
      ++rep.b;
      moved_b = moved_b.unite(c);
    }
  }
  rep.all_succeeded = rep.failures == 0;

  const Partition ab(bip);
  const Partition ba(bip.swapped());
  const Partition a_moved = ab.moved(moved_a);
  const Partition b_moved = ba.moved(moved_b);
  rep.imb_ab = imbalance(g, ab).imb;
  rep.imb_ba = imbalance(g, ba).imb;
  rep.imb_a_moved = imbalance(g, a_moved).imb;
  rep.imb_b_moved = imbalance(g, b_moved).imb;
  const long a = static_cast<long>(rep.a);
  const long b = static_cast<long>(rep.b);
  rep.base_sum_ok = rep.imb_ab + rep.imb_ba >= 0;
  rep.a_side_ok = rep.imb_a_moved >= rep.imb_ab + a;
  rep.b_side_ok = rep.imb_b_moved >= rep.imb_ba + b;
  rep.sum_ok = rep.imb_a_moved + rep.imb_b_moved >= rep.imb_ab + rep.imb_ba + a + b;
  rep.total_ok = rep.imb_a_moved + rep.imb_b_moved >= static_cast<long>(rep.v0_set.size());

  const bool take_a = rep.imb_a_moved >= rep.imb_b_moved;
  rep.final_imb = take_a ? rep.imb_a_moved : rep.imb_b_moved;
  rep.bound = median_bound(g, take_a ? a_moved : b_moved);
  // lambda_index <= 1 and, by symmetry, lambda_{n+1-index} >= -1.
  const long n = static_cast<long>(g.order());
  rep.implied_count =
      static_cast<std::size_t>(std::max(0L, n + 2 - 2 * static_cast<long>(rep.bound.index)));
  rep.eigen_interval_count = count_in_interval(g, Rational(-1), Rational(1));
  rep.count_consistent = rep.eigen_interval_count >= rep.implied_count;
  return rep;
}

}  // namespace hl
