#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hlindex/graph.hpp"

namespace hl {

struct Spectrum {
  std::vector<double> values;  // descending
  double residual_bound = 0.0;  // max_i ||A x_i - lambda_i x_i||_inf
};

/// Dense symmetric eigensolve of the adjacency matrix.
Spectrum eigenvalues(const Graph& g);

/// Eigenvalues only, descending, without eigenvectors or residuals.
std::vector<double> eigenvalues_only(const Graph& g);

struct MedianReport {
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t ell = 0;
  double lambda_h = 0.0;
  double lambda_ell = 0.0;
  double hl_index = 0.0;
  bool exact_at_most_one = false;
};

/// h = floor((n+1)/2), ell = ceil((n+1)/2). exact_at_most_one comes from
/// inertia at 1 and -1. Throws std::invalid_argument for n = 0.
MedianReport median_report(const Graph& g);

/// Exact R(G) <= 1 test alone, without the float spectrum.
bool median_at_most_one(const Graph& g);

struct InterlacingViolation {
  std::size_t i = 0;      // 1-based index
  bool upper = false;     // lambda_i(G) >= lambda_i(K) failed, else the lower chain
  double margin = 0.0;    // amount by which the inequality fails
};

struct InterlacingReport {
  std::size_t checked = 0;
  std::vector<InterlacingViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks lambda_i(G) >= lambda_i(G - A) >= lambda_{i+|A|}(G) for
/// i = 1..n-|A| with tolerance `tol`. Throws std::invalid_argument when A
/// covers every vertex.
InterlacingReport verify_interlacing(const Graph& g, const VertexSet& removed, double tol = 1e-9);

}  // namespace hl
