#include "hlindex/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hlindex/inertia.hpp"

namespace hl {

Spectrum eigenvalues(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Spectrum out;
  if (n == 0) return out;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) a(v, w) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  out.values.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = vals(n - 1 - i);
    const double r = (a * vecs.col(i) - vals(i) * vecs.col(i)).cwiseAbs().maxCoeff();
    out.residual_bound = std::max(out.residual_bound, r);
  }
  return out;
}

std::vector<double> eigenvalues_only(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  if (n == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) a(v, w) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
  return out;
}

bool median_at_most_one(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t h = (n + 1) / 2;
  const std::size_t ell = (n + 2) / 2;
  return inertia(g, Rational(1)).greater <= h - 1 && inertia(g, Rational(-1)).less <= n - ell;
}

MedianReport median_report(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("median report needs at least one vertex");
  const Spectrum spec = eigenvalues(g);
  MedianReport r;
  r.n = n;
  r.h = (n + 1) / 2;
  r.ell = (n + 2) / 2;
  r.lambda_h = spec.values[r.h - 1];
  r.lambda_ell = spec.values[r.ell - 1];
  r.hl_index = std::max(std::abs(r.lambda_h), std::abs(r.lambda_ell));
  r.exact_at_most_one = median_at_most_one(g);
  return r;
}

InterlacingReport verify_interlacing(const Graph& g, const VertexSet& removed, double tol) {
  const std::size_t n = g.order();
  const std::size_t k = removed.size();
  if (!removed.within(n)) throw std::invalid_argument("removed set exceeds the graph");
  if (k >= n) throw std::invalid_argument("interlacing needs a non-empty remainder");
  const auto lg = eigenvalues(g).values;
  const auto lk = eigenvalues(delete_vertices(g, removed).graph).values;
  InterlacingReport rep;
  for (std::size_t i = 0; i < n - k; ++i) {
    ++rep.checked;
    if (lg[i] < lk[i] - tol) rep.violations.push_back({i + 1, true, lk[i] - lg[i]});
    if (lk[i] < lg[i + k] - tol) rep.violations.push_back({i + 1, false, lg[i + k] - lk[i]});
  }
  return rep;
}

}  // namespace hl
