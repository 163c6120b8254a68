#include "hlindex/imbalance.hpp"

#include <stdexcept>
#include <string>

#include "hlindex/structure.hpp"

namespace hl {
namespace {

void check_partition(const Graph& g, const Partition& p) {
  const std::size_t n = g.order();
  if (!p.a.within(n) || !p.b.within(n)) throw std::invalid_argument("partition exceeds the graph");
  if (!p.a.intersect(p.b).empty()) throw std::invalid_argument("partition parts overlap");
  if (p.a.size() + p.b.size() != n) throw std::invalid_argument("partition does not cover V(G)");
}

long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

ImbalanceReport imbalance(const Graph& g, const Partition& p) {
  check_partition(g, p);
  ImbalanceReport r;
  r.s = p.b.empty() ? 1 : 1 + inertia(induced_subgraph(g, p.b).graph, Rational(1)).greater;
  r.t = floor_half(static_cast<long>(p.b.size()) - static_cast<long>(p.a.size()) + 1);
  r.imb = r.t - static_cast<long>(r.s) + 1;
  return r;
}

MedianBound median_bound(const Graph& g, const Partition& p) {
  const ImbalanceReport rep = imbalance(g, p);
  const long n = static_cast<long>(g.order());
  const long h = (n + 1) / 2;
  MedianBound mb;
  mb.r = rep.imb - 1;
  const long index = h - mb.r;
  if (index < 1 || index > n) {
    throw std::invalid_argument("median bound index " + std::to_string(index) + " outside 1.." +
                                std::to_string(n));
  }
  if (index != static_cast<long>(p.a.size() + rep.s)) {
    throw std::logic_error("median bound index differs from |A| + s");
  }
  mb.index = static_cast<std::size_t>(index);
  mb.certified = lambda_k_at_most(g, mb.index, Rational(1));
  return mb;
}

VertexSet increase_subgraph(const Graph& g, const Partition& p, const VertexSet& c) {
  const VertexSet allowed = p.b.unite(c);
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> out(c.begin(), c.end());
  for (Vertex v : c) seen[v] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex w : g.neighbors(out[head])) {
      if (!seen[w] && allowed.contains(w)) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  return VertexSet(std::move(out));
}

std::optional<IncreaseCertificate> increases_imbalance(const Graph& g, const Partition& p,
                                                       const VertexSet& c, Side side) {
  if (c.empty()) throw std::invalid_argument("C must be non-empty");
  if (!c.is_subset_of(p.a)) throw std::invalid_argument("C must lie inside the moving part");
  IncreaseCertificate cert;
  cert.side = side;
  cert.c_set = c;
  cert.q_vertices = increase_subgraph(g, p, c);
  cert.q_inertia = inertia(induced_subgraph(g, cert.q_vertices).graph, Rational(1));
  const bool holds = cert.q_inertia.greater + 1 <= c.size();
  const VertexSet boundary = neighbors_of_set(g, c);
  bool converse = boundary.is_subset_of(p.b);
  for (Vertex w : boundary) {
    if (!converse) break;
    for (Vertex x : g.neighbors(w)) converse = converse && p.a.contains(x);
  }
  if (!holds && !converse) return std::nullopt;
  cert.imb_before = imbalance(g, p).imb;
  cert.imb_after = imbalance(g, p.moved(c)).imb;
  if (holds && cert.imb_after <= cert.imb_before) {
    throw std::logic_error("lambda_|C|(Q) <= 1 but moving C did not increase imbalance");
  }
  if (!holds) {
    if (cert.imb_after > cert.imb_before) {
      throw std::logic_error("imbalance increased although lambda_|C|(Q) > 1");
    }
    return std::nullopt;
  }
  return cert;
}

std::optional<IncreaseCertificate> thick_increase(const Graph& g, const Bipartition& bip,
                                                  const VertexSet& u) {
  std::optional<IncreaseCertificate> cert;
  switch (is_thick(g, bip, u)) {
    case Thickness::a_thick:
      cert = increases_imbalance(g, Partition(bip), u.intersect(bip.a_side), Side::a);
      break;
    case Thickness::b_thick:
      cert = increases_imbalance(g, Partition(bip.swapped()), u.intersect(bip.b_side), Side::b);
      break;
    case Thickness::both_fail:
      return std::nullopt;
  }
  if (!cert) throw std::logic_error("thick set produced no imbalance increase");
  return cert;
}

ReplayResult replay_certificate(const Graph& g, const Bipartition& reference,
                                const IncreaseCertificate& cert) {
  const Partition p = cert.side == Side::a ? Partition(reference) : Partition(reference.swapped());
  if (cert.c_set.empty()) return {false, "empty C"};
  if (!cert.c_set.within(g.order())) return {false, "C exceeds the graph"};
  if (!cert.c_set.is_subset_of(p.a)) return {false, "C is not inside the moving side"};
  const VertexSet q = increase_subgraph(g, p, cert.c_set);
  if (q != cert.q_vertices) return {false, "Q differs from the recorded vertex set"};
  const InertiaCount qi = inertia(induced_subgraph(g, q).graph, Rational(1));
  if (!(qi == cert.q_inertia)) return {false, "recorded inertia of Q is wrong"};
  if (qi.greater + 1 > cert.c_set.size()) return {false, "lambda_|C|(Q) exceeds 1"};
  const long before = imbalance(g, p).imb;
  const long after = imbalance(g, p.moved(cert.c_set)).imb;
  if (before != cert.imb_before) return {false, "recorded imbalance before the move is wrong"};
  if (after != cert.imb_after) return {false, "recorded imbalance after the move is wrong"};
  if (after <= before) return {false, "imbalance did not increase"};
  return {true, "ok"};
}

}  // namespace hl
