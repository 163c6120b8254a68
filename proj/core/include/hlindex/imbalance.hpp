#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlindex/graph.hpp"
#include "hlindex/inertia.hpp"

namespace hl {

/// Ordered vertex partition (A, B); unlike Bipartition, edges may lie inside
/// either part.
struct Partition {
  VertexSet a;
  VertexSet b;

  Partition() = default;
  Partition(VertexSet a_part, VertexSet b_part) : a(std::move(a_part)), b(std::move(b_part)) {}
  explicit Partition(const Bipartition& bip) : a(bip.a_side), b(bip.b_side) {}

  Partition swapped() const { return {b, a}; }
  /// (A \ C, B u C).
  Partition moved(const VertexSet& c) const { return {a.minus(c), b.unite(c)}; }
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct ImbalanceReport {
  std::size_t s = 1;  // least index with lambda_s(G(B)) <= 1
  long t = 0;         // floor((|B| - |A| + 1) / 2)
  long imb = 0;       // t - s + 1
};

/// Throws std::invalid_argument unless (A, B) partitions V(G).
ImbalanceReport imbalance(const Graph& g, const Partition& p);

struct MedianBound {
  long r = 0;              // imb - 1
  std::size_t index = 0;   // h - r, equal to |A| + s
  bool certified = false;  // lambda_index(G) <= 1, exactly
};

/// Throws std::invalid_argument when h - r falls outside 1..n.
MedianBound median_bound(const Graph& g, const Partition& p);

/// Which ordered partition a certificate refers to, relative to a reference
/// bipartition (A, B): side A means C is moved within (A, B), side B within (B, A).
enum class Side { a, b };

struct IncreaseCertificate {
  Side side = Side::a;
  VertexSet c_set;
  VertexSet q_vertices;
  InertiaCount q_inertia;
  long imb_before = 0;
  long imb_after = 0;
};

/// Union of the components of G(B u C) that meet C.
VertexSet increase_subgraph(const Graph& g, const Partition& p, const VertexSet& c);

/// Tests lambda_|C|(Q) <= 1 exactly and, on success, confirms the increase by
/// recomputing both imbalances. When N(C) lies in B and every vertex of N(C)
/// has all its neighbours in A, a failed test is confirmed to give no increase.
/// Throws std::invalid_argument when C is empty or not inside A, and
/// std::logic_error if a recomputation contradicts the test.
std::optional<IncreaseCertificate> increases_imbalance(const Graph& g, const Partition& p,
                                                       const VertexSet& c, Side side = Side::a);

/// For an A-thick (B-thick) U, moves A n U within (A, B) (B n U within (B, A)).
/// Returns nullopt when U is not thick; a thick set that yields no
/// certificate throws std::logic_error.
std::optional<IncreaseCertificate> thick_increase(const Graph& g, const Bipartition& bip,
                                                  const VertexSet& u);

struct ReplayResult {
  bool ok = false;
  std::string detail;
};

/// Recomputes every field of the certificate against `reference`.
ReplayResult replay_certificate(const Graph& g, const Bipartition& reference,
                                const IncreaseCertificate& cert);

struct SearchConfig {
  std::size_t radius = 17;
  std::size_t max_size = 8;
  std::uint64_t budget = 10'000'000;  // candidate sets per side
  bool use_patterns = true;
};

enum class SearchOutcome { found, exhausted, refused };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<IncreaseCertificate> certificate;
  std::string strategy;  // which rung of the ladder produced the certificate
  std::string reason;    // for refusals
  std::size_t radius_reached = 0;
  std::size_t size_reached = 0;
  std::uint64_t candidates_a = 0;
  std::uint64_t candidates_b = 0;
  bool budget_exhausted = false;
};

/// Bounded search for an imbalance-increasing set inside ball(v0, radius), on
/// either side of the bipartition. Ladder: degree <= 1 singletons, thick
/// balls, pattern-directed candidates, then connected same-side sets in
/// radius, size and lexicographic order. Every certificate is replayed.
/// A Heawood component is refused. Throws std::invalid_argument unless G is
/// bipartite with maximum degree 3.
SearchResult search_increasing_set(const Graph& g, const Bipartition& bip, Vertex v0,
                                   const SearchConfig& cfg = {});

struct PipelineConfig {
  std::size_t separation = 38;
  SearchConfig search;
  unsigned jobs = 1;
};

struct VertexOutcome {
  Vertex v = 0;
  SearchResult result;
  bool dropped = false;  // certificate discarded: closer than 4 to an earlier set
};

struct PipelineReport {
  std::vector<Vertex> v0_set;
  std::vector<VertexOutcome> outcomes;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t failures = 0;  // refusals, exhausted searches and dropped sets
  long imb_ab = 0;
  long imb_ba = 0;
  long imb_a_moved = 0;  // imb(A', B')
  long imb_b_moved = 0;  // imb(B'', A'')
  bool base_sum_ok = false;  // imb(A,B) + imb(B,A) >= 0
  bool a_side_ok = false;    // imb(A',B') >= imb(A,B) + a
  bool b_side_ok = false;    // imb(B'',A'') >= imb(B,A) + b
  bool sum_ok = false;       // imb(A',B') + imb(B'',A'') >= imb(A,B) + imb(B,A) + a + b
  bool all_succeeded = false;
  bool total_ok = false;     // sum >= |V0| when every search succeeded
  long final_imb = 0;
  MedianBound bound;
  std::size_t implied_count = 0;  // eigenvalues in [-1, 1] implied by the bound
  std::size_t eigen_interval_count = 0;
  bool count_consistent = false;
  bool conforming = false;   // separation >= 38 and radius <= 17
  std::size_t separation = 0;
  std::size_t radius = 0;
  Rational epsilon;
  Rational delta;

  bool ok() const {
    return base_sum_ok && a_side_ok && b_side_ok && sum_ok && (!all_succeeded || total_ok) &&
           bound.certified && count_consistent;
  }
};

/// Greedy set of vertices pairwise at distance >= separation (vertices in
/// different components are at infinite distance).
std::vector<Vertex> separated_set(const Graph& g, std::size_t separation);

/// Throws std::invalid_argument unless G is bipartite with maximum degree 3.
PipelineReport fraction_pipeline(const Graph& g, const PipelineConfig& cfg = {});

}  // namespace hl
