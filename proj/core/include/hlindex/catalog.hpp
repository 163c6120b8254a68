#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hlindex/graph.hpp"
#include "hlindex/poly.hpp"
#include "hlindex/rational.hpp"

namespace hl {

enum class ClaimKind { equals_one, less_than };

/// lambda_k = 1, or lambda_k < bound.
struct Claim {
  std::size_t k = 1;
  ClaimKind kind = ClaimKind::equals_one;
  Rational bound = 1;

  static Claim equals_one(std::size_t k) { return {k, ClaimKind::equals_one, Rational(1)}; }
  static Claim less_than(std::size_t k, Rational b) {
    b.canonicalize();
    return {k, ClaimKind::less_than, std::move(b)};
  }
  friend bool operator==(const Claim&, const Claim&) = default;
};

enum class Provenance { text_pinned, reconstructed };

struct EigenCertificate {
  std::vector<Rational> vector;
  Rational eigenvalue;
};

/// Deleting `removed` leaves one component with more than two vertices
/// (`residual`, matched up to isomorphism) and otherwise edges and isolated
/// vertices. With no residual graph, only the small components may remain.
struct ReductionRecipe {
  VertexSet removed;
  std::string residual_name;
  std::optional<Graph> residual;
  std::optional<IntPoly> residual_char_poly;
};

struct CatalogEntry {
  std::string name;
  Graph graph;
  std::vector<std::string> labels;  // labels[v] names vertex v
  VertexSet marked;
  std::vector<Claim> claims;        // claims.front() is the headline claim
  std::optional<EigenCertificate> certificate;
  Provenance provenance = Provenance::reconstructed;
  std::optional<ReductionRecipe> recipe;
  std::string constraints;          // what pins a reconstruction, and what is assumed

  std::optional<Vertex> vertex(std::string_view label) const;
};

/// Path v1..v_{2t+1} with a pendant on every odd-position vertex; the odd
/// path vertices are marked and lambda_{t+1} = 1.
CatalogEntry p_hat(std::size_t t);

/// Every named entry, followed by p_hat(0..8) under the names p_hat_0..p_hat_8.
const std::vector<CatalogEntry>& catalog();

/// Lookup by name; "p_hat_<t>" builds any t.
std::optional<CatalogEntry> find_entry(std::string_view name);

/// Named residual graphs used by recipes.
Graph p7_minus_graph();
Graph c6_plus_graph();

struct CheckResult {
  std::string check;
  bool ok = false;
  std::string detail;
};

struct EntryReport {
  std::string name;
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Exact claims (plus a float margin for strict bounds), the side condition
/// lambda_1(G - marked) <= 1, the eigenvector certificate, and the reduction
/// recipe with its interlacing count and residual characteristic polynomial.
EntryReport verify_entry(const CatalogEntry& e);

}  // namespace hl
