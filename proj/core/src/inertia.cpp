#include "hlindex/inertia.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "hlindex/poly.hpp"

namespace hl {
namespace {

// Symmetric sparse matrix: diagonal plus off-diagonal rows, kept mirrored.
struct SparseSym {
  std::vector<Rational> diag;
  std::vector<std::map<Vertex, Rational>> off;
  std::vector<char> active;

  void remove(Vertex p) {
    for (auto& [j, value] : off[p]) off[j].erase(p);
    off[p].clear();
    active[p] = 0;
  }

  void add_off(Vertex i, Vertex j, const Rational& delta) {
    auto [it, inserted] = off[i].try_emplace(j, delta);
    if (!inserted) {
      it->second += delta;
      if (it->second == 0) {
        off[i].erase(it);
        off[j].erase(i);
        return;
      }
    }
    off[j][i] = it->second;
  }
};

}  // namespace

InertiaCount inertia(const Graph& g, const Rational& threshold) {
  Rational t = threshold;
  t.canonicalize();
  const std::size_t n = g.order();
  InertiaCount out{t, 0, 0, 0};
  // Eigenvalues of A - tI share signs with those of qA - pI.
  const Integer p = t.get_num();
  const Integer q = t.get_den();
  SparseSym m;
  m.diag.assign(n, Rational(-p));
  m.off.resize(n);
  m.active.assign(n, 1);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) m.off[v].emplace(w, Rational(q));
  }
  std::size_t remaining = n;
  while (remaining > 0) {
    std::optional<Vertex> pivot;
    std::optional<Vertex> isolated;
    std::optional<Vertex> sparsest;
    for (Vertex v = 0; v < n; ++v) {
      if (!m.active[v]) continue;
      const std::size_t deg = m.off[v].size();
      if (m.diag[v] != 0) {
        if (!pivot || deg < m.off[*pivot].size()) pivot = v;
      } else if (deg == 0) {
        isolated = v;
      } else if (!sparsest || deg < m.off[*sparsest].size()) {
        sparsest = v;
      }
    }
    if (pivot) {
      const Vertex k = *pivot;
      const Rational d = m.diag[k];
      (d > 0 ? out.greater : out.less) += 1;
      std::vector<std::pair<Vertex, Rational>> row(m.off[k].begin(), m.off[k].end());
      m.remove(k);
      for (const auto& [i, a] : row) {
        m.diag[i] -= a * a / d;
        for (const auto& [j, b] : row) {
          if (i < j) m.add_off(i, j, -(a * b / d));
        }
      }
      --remaining;
      continue;
    }
    if (isolated) {
      ++out.equal;
      m.active[*isolated] = 0;
      --remaining;
      continue;
    }
    // Every active diagonal is zero: pivot on the 2x2 block [[0, b], [b, 0]],
    // which contributes one positive and one negative eigenvalue.
    const Vertex k = *sparsest;
    Vertex r = m.off[k].begin()->first;
    for (const auto& [j, value] : m.off[k]) {
      if (m.off[j].size() < m.off[r].size()) r = j;
    }
    const Rational b = m.off[k].at(r);
    out.greater += 1;
    out.less += 1;
    std::map<Vertex, std::pair<Rational, Rational>> border;  // i -> (M_ik, M_ir)
    for (const auto& [i, value] : m.off[k]) {
      if (i != r) border[i].first = value;
    }
    for (const auto& [i, value] : m.off[r]) {
      if (i != k) border[i].second = value;
    }
    m.remove(k);
    m.remove(r);
    for (const auto& [i, ui] : border) {
      for (const auto& [j, uj] : border) {
        if (j < i) continue;
        const Rational delta = -(ui.first * uj.second + ui.second * uj.first) / b;
        if (delta == 0) continue;
        if (i == j) {
          m.diag[i] += delta;
        } else {
          m.add_off(i, j, delta);
        }
      }
    }
    remaining -= 2;
  }
  return out;
}

namespace {

using QPoly = std::vector<Rational>;  // ascending coefficients, no trailing zeros

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// Scales by a positive constant so the leading coefficient has magnitude 1.
void normalise(QPoly& p) {
  if (p.empty()) return;
  Rational lc = abs(p.back());
  for (auto& c : p) c /= lc;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  rem = a;
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Rational f = rem.back() / b.back();
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    normalise(b);
  }
  normalise(a);
  return a;
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  if (!r.empty()) throw std::logic_error("polynomial division left a remainder");
  return q;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

int sign_at(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

// Sign-variation counts of the Sturm chain at x, +inf and -inf.
struct SturmChain {
  std::vector<QPoly> chain;

  explicit SturmChain(const QPoly& f) {
    chain.push_back(f);
    QPoly d = derivative(f);
    if (d.empty()) return;
    normalise(d);
    chain.push_back(d);
    while (true) {
      QPoly q, r;
      divmod(chain[chain.size() - 2], chain.back(), q, r);
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      normalise(r);
      chain.push_back(std::move(r));
    }
  }

  static std::size_t variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  std::size_t at(const Rational& x) const {
    std::vector<int> s;
    for (const auto& p : chain) s.push_back(sign_at(p, x));
    return variations(s);
  }
  std::size_t at_infinity(bool positive) const {
    std::vector<int> s;
    for (const auto& p : chain) {
      int lead = sgn(p.back());
      s.push_back(positive || (p.size() - 1) % 2 == 0 ? lead : -lead);
    }
    return variations(s);
  }
};

}  // namespace

InertiaCount inertia_sturm(const Graph& g, const Rational& threshold) {
  Rational t = threshold;
  t.canonicalize();
  const IntPoly phi = char_poly(g);
  QPoly f;
  for (const auto& c : phi.coeffs) f.emplace_back(c);
  trim(f);
  InertiaCount out{t, 0, 0, 0};
  // Strip the factor (qx - p) to read the multiplicity at t.
  const QPoly linear{Rational(-t.get_num()), Rational(t.get_den())};
  while (f.size() > 1 && sign_at(f, t) == 0) {
    f = exact_quotient(f, linear);
    ++out.equal;
  }
  // Yun's squarefree decomposition: f = c * prod a_i^i.
  if (f.size() > 1) {
    QPoly a0 = gcd(f, derivative(f));
    QPoly b = exact_quotient(f, a0);
    QPoly c = exact_quotient(derivative(f), a0);
    QPoly d = sub(c, derivative(b));
    for (std::size_t i = 1; b.size() > 1; ++i) {
      QPoly a = gcd(b, d);
      if (a.size() > 1) {
        SturmChain chain(a);
        const std::size_t vt = chain.at(t);
        out.greater += i * (vt - chain.at_infinity(true));
        out.less += i * (chain.at_infinity(false) - vt);
      }
      b = exact_quotient(b, a);
      c = exact_quotient(d, a);
      d = sub(c, derivative(b));
    }
  }
  return out;
}

std::size_t count_in_interval(const Graph& g, const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("count_in_interval: lo exceeds hi");
  return g.order() - inertia(g, hi).greater - inertia(g, lo).less;
}

bool lambda_k_at_most(const Graph& g, std::size_t k, const Rational& t) {
  if (k < 1 || k > g.order()) {
    throw std::out_of_range("eigenvalue index " + std::to_string(k) + " outside 1.." +
                            std::to_string(g.order()));
  }
  return inertia(g, t).greater <= k - 1;
}

bool check_eigenvector(const Graph& g, const std::vector<Rational>& x, const Rational& lam) {
  if (x.size() != g.order()) throw std::invalid_argument("eigenvector length mismatch");
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; })) {
    throw std::invalid_argument("zero vector is not an eigenvector");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    Rational sum = 0;
    for (Vertex w : g.neighbors(v)) sum += x[w];
    if (sum != lam * x[v]) return false;
  }
  return true;
}

}  // namespace hl
