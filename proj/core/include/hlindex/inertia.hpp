#pragma once

#include <cstddef>
#include <vector>

#include "hlindex/graph.hpp"
#include "hlindex/rational.hpp"

namespace hl {

/// Exact eigenvalue counts of the adjacency matrix relative to a threshold.
struct InertiaCount {
  Rational threshold;
  std::size_t greater = 0;
  std::size_t equal = 0;
  std::size_t less = 0;

  std::size_t total() const { return greater + equal + less; }
  friend bool operator==(const InertiaCount&, const InertiaCount&) = default;
};

/// Sylvester inertia of qA - pI (t = p/q) by sparse symmetric elimination over
/// the rationals, with 2x2 pivots when every remaining diagonal entry is zero.
InertiaCount inertia(const Graph& g, const Rational& t);

/// Same counts from Sturm sequences of the squarefree factors of the exact
/// characteristic polynomial. Limited to the char_poly bound.
InertiaCount inertia_sturm(const Graph& g, const Rational& t);

/// Eigenvalues in the closed interval [lo, hi].
std::size_t count_in_interval(const Graph& g, const Rational& lo, const Rational& hi);

/// lambda_k(G) <= t, decided exactly. Throws std::out_of_range unless 1 <= k <= n.
bool lambda_k_at_most(const Graph& g, std::size_t k, const Rational& t);

/// A x == lam x over the rationals. Throws std::invalid_argument for a zero
/// vector or a length mismatch.
bool check_eigenvector(const Graph& g, const std::vector<Rational>& x, const Rational& lam);

}  // namespace hl
