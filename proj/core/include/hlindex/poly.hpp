#pragma once

#include <cstddef>
#include <vector>

#include "hlindex/graph.hpp"
#include "hlindex/rational.hpp"

namespace hl {

/// Integer polynomial, coefficients in ascending degree (coeffs[i] of x^i).
struct IntPoly {
  std::vector<Integer> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;
  IntPoly derivative() const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

inline constexpr std::size_t kCharPolyDefaultBound = 64;

class CharPolyBoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// det(xI - A) by the Berkowitz recurrence over the integers, exploiting the
/// sparsity of A. Throws CharPolyBoundError when n exceeds `bound`.
IntPoly char_poly(const Graph& g, std::size_t bound = kCharPolyDefaultBound);

/// det(tI - A) by Bareiss fraction-free elimination.
Integer det_shifted_adjacency(const Graph& g, const Integer& t);

/// Bareiss determinant of a dense square integer matrix (row-major).
Integer det_bareiss(std::vector<std::vector<Integer>> m);

}  // namespace hl
