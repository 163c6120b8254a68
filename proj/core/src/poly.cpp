#include "hlindex/poly.hpp"

#include <string>

namespace hl {

Integer IntPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  IntPoly d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(coeffs[i] * static_cast<unsigned long>(i));
  if (d.coeffs.empty()) d.coeffs.push_back(0);
  return d;
}

IntPoly char_poly(const Graph& g, std::size_t bound) {
  const std::size_t n = g.order();
  if (n > bound) {
    throw CharPolyBoundError("char_poly: n = " + std::to_string(n) + " exceeds the bound " +
                             std::to_string(bound) + "; use inertia for eigenvalue counts");
  }
  // c holds det(xI - A_k) for the leading k x k block.
  std::vector<Integer> c{1};
  for (std::size_t k = 1; k <= n; ++k) {
    const Vertex last = static_cast<Vertex>(k - 1);
    const std::size_t m = k - 1;
    // w[j] = R M^j C with M the leading m x m block, R and C its border.
    std::vector<Integer> w(m > 0 ? m : 0);
    if (m > 0) {
      std::vector<Integer> v(m, 0);
      for (Vertex u : g.neighbors(last)) {
        if (u < last) v[u] = 1;
      }
      for (std::size_t j = 0; j < m; ++j) {
        Integer dot = 0;
        for (Vertex u : g.neighbors(last)) {
          if (u < last) dot += v[u];
        }
        w[j] = dot;
        if (j + 1 == m) break;
        std::vector<Integer> next(m, 0);
        for (Vertex a = 0; a < m; ++a) {
          if (v[a] == 0) continue;
          for (Vertex b : g.neighbors(a)) {
            if (b < m) next[b] += v[a];
          }
        }
        v = std::move(next);
      }
    }
    std::vector<Integer> d(k + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) d[i + 1] += c[i];
    // subtract sum_j x^j sum_{i=j+1}^{m} c_i w_{i-j-1}
    for (std::size_t j = 0; j + 1 <= m; ++j) {
      Integer s = 0;
      for (std::size_t i = j + 1; i <= m; ++i) s += c[i] * w[i - j - 1];
      d[j] -= s;
    }
    c = std::move(d);
  }
  return IntPoly{std::move(c)};
}

Integer det_bareiss(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer det_shifted_adjacency(const Graph& g, const Integer& t) {
  const std::size_t n = g.order();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  for (Vertex v = 0; v < n; ++v) {
    m[v][v] = t;
    for (Vertex w : g.neighbors(v)) m[v][w] = -1;
  }
  return det_bareiss(std::move(m));
}

}  // namespace hl
