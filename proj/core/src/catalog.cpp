#include "hlindex/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "hlindex/canonical.hpp"
#include "hlindex/inertia.hpp"
#include "hlindex/spectra.hpp"

namespace hl {
namespace {

using Names = std::vector<std::string>;

class Builder {
 public:
  Vertex id(const std::string& name) {
    auto [it, inserted] = ids_.try_emplace(name, static_cast<Vertex>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }
  bool has(const std::string& name) const { return ids_.contains(name); }
  Vertex at(const std::string& name) const { return ids_.at(name); }

  Builder& edge(const std::string& a, const std::string& b) {
    Vertex u = id(a);
    Vertex v = id(b);
    if (std::find(edges_.begin(), edges_.end(), Edge{u, v}) == edges_.end() &&
        std::find(edges_.begin(), edges_.end(), Edge{v, u}) == edges_.end()) {
      edges_.emplace_back(u, v);
    }
    return *this;
  }
  Builder& path(const Names& vs) {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) edge(vs[i], vs[i + 1]);
    return *this;
  }
  Builder& cycle(const Names& vs) {
    path(vs);
    return edge(vs.back(), vs.front());
  }

  Graph graph() const { return Graph::from_edge_list(names_.size(), edges_); }
  const Names& names() const { return names_; }
  std::vector<std::string> neighbours(const std::string& name) const {
    std::vector<std::string> out;
    Vertex v = at(name);
    for (auto [a, b] : edges_) {
      if (a == v) out.push_back(names_[b]);
      if (b == v) out.push_back(names_[a]);
    }
    return out;
  }

 private:
  std::map<std::string, Vertex> ids_;
  Names names_;
  std::vector<Edge> edges_;
};

Names numbered(const std::string& prefix, int first, int last) {
  Names out;
  for (int i = first; i <= last; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string pendant_name(const std::string& c, std::size_t i) { return c + std::string(i, '\''); }

// Entry graph from a host: every host edge at a marked vertex, plus pendants
// raising each marked vertex outside `bare` to degree 3.
struct Draft {
  Builder b;
  Names marked;
  std::vector<std::pair<std::string, std::string>> pendants;  // (pendant, owner)
};

Draft from_host(const Builder& host, const Names& marked, const Names& bare = {}) {
  Draft d;
  d.marked = marked;
  for (const auto& c : marked) {
    d.b.id(c);
    for (const auto& u : host.neighbours(c)) d.b.edge(c, u);
  }
  for (const auto& c : marked) {
    if (std::find(bare.begin(), bare.end(), c) != bare.end()) continue;
    auto deg = host.neighbours(c).size();
    for (std::size_t i = 1; deg < 3; ++i, ++deg) {
      d.b.edge(c, pendant_name(c, i));
      d.pendants.emplace_back(pendant_name(c, i), c);
    }
  }
  return d;
}

// Marked class: the side of the host bipartition containing `anchor`.
Names class_of(const Builder& host, const std::string& anchor) {
  auto g = host.graph();
  auto bip = *bipartition(g);
  Vertex a = host.at(anchor);
  const auto& side = bip.a_side.contains(a) ? bip.a_side : bip.b_side;
  Names out;
  for (Vertex v : side) out.push_back(host.names()[v]);
  return out;
}

Draft direct(const Builder& b, const Names& marked) {
  Draft d;
  d.b = b;
  d.marked = marked;
  return d;
}

struct Spec {
  std::string name;
  Draft draft;
  std::vector<Claim> claims;
  Provenance provenance = Provenance::reconstructed;
  std::map<std::string, int> eigenvector{};  // eigenvalue 1; pendants copy their owner
  Names removed{};
  std::string residual_name{};
  std::optional<Graph> residual{};
  std::optional<IntPoly> residual_char_poly{};
  std::string constraints{};
};

CatalogEntry finish(Spec s) {
  CatalogEntry e;
  e.name = std::move(s.name);
  e.graph = s.draft.b.graph();
  e.labels = s.draft.b.names();
  std::vector<Vertex> marked;
  for (const auto& m : s.draft.marked) marked.push_back(s.draft.b.id(m));
  e.marked = VertexSet(std::move(marked));
  e.claims = std::move(s.claims);
  e.provenance = s.provenance;
  if (!s.eigenvector.empty()) {
    EigenCertificate cert;
    cert.eigenvalue = 1;
    cert.vector.assign(e.graph.order(), Rational(0));
    for (const auto& [label, value] : s.eigenvector) {
      if (!s.draft.b.has(label)) throw std::logic_error(e.name + ": unknown vertex " + label);
      cert.vector[s.draft.b.id(label)] = value;
    }
    for (const auto& [p, owner] : s.draft.pendants) {
      if (!s.eigenvector.contains(p)) cert.vector[s.draft.b.id(p)] = cert.vector[s.draft.b.id(owner)];
    }
    e.certificate = std::move(cert);
  }
  if (!s.removed.empty()) {
    ReductionRecipe r;
    std::vector<Vertex> removed;
    for (const auto& label : s.removed) {
      if (!s.draft.b.has(label)) throw std::logic_error(e.name + ": unknown vertex " + label);
      removed.push_back(s.draft.b.id(label));
    }
    r.removed = VertexSet(std::move(removed));
    r.residual_name = std::move(s.residual_name);
    r.residual = std::move(s.residual);
    r.residual_char_poly = std::move(s.residual_char_poly);
    e.recipe = std::move(r);
  }
  e.constraints = std::move(s.constraints);
  return e;
}

IntPoly poly(std::initializer_list<long> ascending) {
  IntPoly p;
  for (long c : ascending) p.coeffs.emplace_back(c);
  return p;
}

// 8-cycle 1..8 with 11 on 2, 6 and 12 on 1, 5.
Builder h0_host() {
  Builder b;
  b.cycle({"1", "2", "3", "4", "5", "6", "7", "8"});
  b.path({"2", "11", "6"}).path({"1", "12", "5"});
  return b;
}

Builder h1_host() {
  Builder b = h0_host();
  b.path({"3", "10", "7"}).path({"4", "9", "8"});
  return b;
}

Builder h6_host() {
  Builder b = h0_host();
  b.path({"3", "x1", "x2", "x3", "x4", "4"});
  b.path({"7", "y1", "y2", "y3", "y4", "8"});
  return b;
}

const Names kH6Marked{"2", "4", "6", "8", "12", "x1", "x3", "y1", "y3"};

Builder hexagon_d() {
  Builder b;
  b.cycle(numbered("v", 1, 6));
  return b;
}

// D with hexagons hanging from v1 and vj.
Builder claim6_host(int j) {
  Builder b = hexagon_d();
  const std::string vj = "v" + std::to_string(j);
  const std::string uj = "u" + std::to_string(j);
  b.edge("v1", "u1").edge(vj, uj);
  b.cycle({"u1", "a1", "a2", "a3", "a4", "a5"});
  b.cycle({uj, "b1", "b2", "b3", "b4", "b5"});
  return b;
}

Graph path_with_pendants(std::size_t length, std::size_t per_end, bool inner) {
  Builder b;
  auto vs = numbered("v", 0, static_cast<int>(length));
  b.path(vs);
  if (inner) {
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) b.edge(vs[i], vs[i] + "'");
  }
  for (std::size_t i = 1; i <= per_end; ++i) {
    b.edge(vs.front(), pendant_name(vs.front(), i));
    b.edge(vs.back(), pendant_name(vs.back(), i));
  }
  return b.graph();
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<Spec> specs;

  auto cycle_plus = [](int len) {
    Builder b;
    auto vs = numbered("v", 1, len);
    b.cycle(vs);
    Names marked;
    for (int i = 1; i <= len; i += 2) {
      b.edge(vs[i - 1], vs[i - 1] + "'");
      marked.push_back(vs[i - 1]);
    }
    return direct(b, marked);
  };
  auto alternating = [](int len) {
    std::map<std::string, int> x;
    for (int i = 1, sign = 1; i <= len; i += 2, sign = -sign) x["v" + std::to_string(i)] = sign;
    return x;
  };
  auto with_pendants_copied = [](Draft& d, std::map<std::string, int> x) {
    for (auto& [p, owner] : d.pendants) {
      if (x.contains(owner) && !x.contains(p)) x[p] = x[owner];
    }
    return x;
  };
  {
    Draft d = cycle_plus(4);
    for (auto& m : d.marked) d.pendants.emplace_back(m + "'", m);
    Spec s{"c4_plus", d, {Claim::equals_one(2)}, Provenance::text_pinned};
    s.eigenvector = with_pendants_copied(d, alternating(4));
    s.constraints = "4-cycle with one pendant on each of two opposite vertices";
    specs.push_back(std::move(s));
  }
  {
    Builder b = hexagon_d();
    b.edge("v1", "v1'");
    Draft d = direct(b, {"v1", "v3", "v5"});
    d.pendants.emplace_back("v1'", "v1");
    Spec s{"c6_plus", d, {Claim::equals_one(3)}, Provenance::text_pinned};
    s.eigenvector = {{"v2", -1}, {"v3", -1}, {"v5", 1}, {"v6", 1}};
    s.removed = {"v1", "v4"};
    s.residual_name = "matching";
    s.constraints = "6-cycle with a single pendant";
    specs.push_back(std::move(s));
  }
  for (auto [len, k, name] : {std::tuple{8, 4, "c8_plus"}, std::tuple{12, 6, "c12_plus"}}) {
    Draft d = cycle_plus(len);
    for (auto& m : d.marked) d.pendants.emplace_back(m + "'", m);
    Spec s{name, d, {Claim::equals_one(static_cast<std::size_t>(k))}, Provenance::text_pinned};
    s.eigenvector = with_pendants_copied(d, alternating(len));
    s.constraints = "even cycle with pendants on alternate vertices";
    specs.push_back(std::move(s));
  }
  {
    Builder b;
    b.path({"a1", "a2", "a3", "a4", "a5"});
    b.edge("a1", "l1").edge("a1", "l2").edge("a5", "l3").edge("a5", "l4");
    Spec s{"p7_minus", direct(b, {"a1", "a3", "a5"}), {Claim::equals_one(3)},
           Provenance::text_pinned};
    s.eigenvector = {{"l1", 1}, {"l2", 1}, {"l3", 1}, {"l4", 1}, {"a1", 1},
                     {"a5", 1}, {"a2", -1}, {"a4", -1}, {"a3", -2}};
    s.constraints = "path on five vertices with two pendants at each end";
    specs.push_back(std::move(s));
  }
  {
    Builder host;
    host.cycle({"v", "v1", "v2", "v3", "v4", "v5"});
    host.edge("v1", "u1").edge("v2", "u2").edge("v4", "u4").edge("v5", "u5");
    host.edge("u2", "u5").edge("u4", "u1");
    host.path({"u1", "w", "u5"}).path({"u2", "z", "u4"});
    Spec s{"c6_hat", from_host(host, {"v", "v2", "v4", "u1", "u5", "z"}, {"v"}),
           {Claim::less_than(6, Rational(91, 100))}};
    s.removed = {"v2", "u2", "v4", "u4"};
    s.residual_name = "c6";
    s.residual = cycle_graph(6);
    s.constraints =
        "hexagon R at v with four attached neighbours; pinned by the strict bound at 91/100 and "
        "the 6-cycle residual; the u-w-z wiring is assumed";
    specs.push_back(std::move(s));
  }
  {
    Builder b;
    Names marked{"r"};
    std::map<std::string, int> x{{"r", 3}};
    for (int i = 0; i < 3; ++i) {
      std::string c = "c" + std::to_string(i);
      b.edge("r", c);
      x[c] = 1;
      for (int j = 0; j < 2; ++j) {
        std::string g = "g" + std::to_string(i) + std::to_string(j);
        b.edge(c, g);
        marked.push_back(g);
        x[g] = -1;
        for (int k = 0; k < 2; ++k) {
          std::string l = "l" + std::to_string(i) + std::to_string(j) + std::to_string(k);
          b.edge(g, l);
          x[l] = -1;
        }
      }
    }
    Spec s{"b3", direct(b, marked), {Claim::equals_one(7)}, Provenance::text_pinned};
    s.eigenvector = x;
    s.constraints = "rooted tree, branching 3 then 2 then 2";
    specs.push_back(std::move(s));
  }
  {
    Builder host = h1_host();
    host.path({"10", "13", "12"}).path({"9", "14", "11"});
    host.cycle({"x1", "d1", "d2", "d3", "d4", "d5"});
    host.edge("13", "x1");
    Spec s{"h2_circ", from_host(host, {"3", "5", "11", "13", "d1", "d3", "d5"}),
           {Claim::equals_one(7)}};
    s.eigenvector = {{"3", 1},   {"4", 2},   {"10", -1}, {"5", 1},  {"12", -1}, {"11", -1},
                     {"14", -1}, {"13", -2}, {"d1", 1},  {"d3", -1}, {"d5", 1}};
    s.removed = {"2", "6", "x1", "d2", "d4"};
    s.residual_name = "c6";
    s.residual = cycle_graph(6);
    s.constraints =
        "Heawood graph minus one edge with a hexagon hung from the free vertex; pinned by the "
        "claim, the eigenvector and the 6-cycle residual";
    specs.push_back(std::move(s));
  }
  {
    Builder host = h1_host();
    host.path({"10", "15", "16", "9"}).path({"12", "13", "14", "11"});
    Spec s{"h4_minus", from_host(host, {"3", "5", "7", "9", "11", "13", "15"}),
           {Claim::equals_one(7)}};
    s.eigenvector = {{"3", -1}, {"10", -1}, {"5", 1},   {"6", 1},  {"7", -1}, {"8", -1},
                     {"16", 1}, {"11", 1},  {"13", -1}, {"15", 1}};
    s.constraints = "two 3-paths closing H1; pinned by the claim and the eigenvector";
    specs.push_back(std::move(s));
  }
  {
    Spec s{"h0_eq", from_host(h0_host(), {"1", "3", "5", "7"}, {"3"}), {Claim::equals_one(4)},
           Provenance::text_pinned};
    s.eigenvector = {{"1", -1}, {"2", 1}, {"12", -2}, {"3", 2}, {"4", 1}, {"5", -1}, {"7", 1}};
    s.removed = {"8", "6"};
    s.residual_name = "c6";
    s.residual = cycle_graph(6);
    s.constraints = "odd class of H0 except the vertex 11; vertex 3 keeps degree 2";
    specs.push_back(std::move(s));
  }
  {
    Builder host = h0_host();
    host.path({"3", "13", "14", "12"}).edge("4", "a");
    host.cycle({"a", "b", "c", "d", "e", "g"});
    Spec s{"n0_hat", from_host(host, {"2", "4", "6", "12", "13", "b", "d", "g"}),
           {Claim::equals_one(8)}};
    s.removed = {"2", "1", "c"};
    s.constraints =
        "H0 with a 3-path from 3 to 12 and a hexagon at 4; pinned by the claim and the "
        "interlacing count after deleting three vertices";
    specs.push_back(std::move(s));
  }
  {
    Builder host = h0_host();
    host.path({"3", "a", "b", "c", "d", "4"});
    host.edge("11", "c").edge("12", "b");
    host.path({"a", "e", "f", "d"});
    Spec s{"h5_hat", from_host(host, {"2", "4", "6", "8", "12", "a", "c", "f"}),
           {Claim::less_than(8, Rational(92, 100))}};
    s.removed = {"2", "1", "7", "b"};
    s.constraints =
        "H0 with a 5-path from 3 to 4 joined to 11 and 12; pinned by the strict bound at "
        "92/100 and the interlacing count";
    specs.push_back(std::move(s));
  }
  {
    Spec s{"h6_0", from_host(h6_host(), kH6Marked), {Claim::equals_one(9)}};
    s.removed = {"1", "5", "x1", "y1"};
    s.residual_name = "path on 11 vertices with two pendants at each end";
    s.residual = path_with_pendants(10, 2, false);
    s.residual_char_poly = poly({0, 0, 0, 24, 0, -146, 0, 259, 0, -200, 0, 76, 0, -14, 0, 1});
    s.constraints = "H0 with 5-paths 3..4 and 7..8; pinned by the residual characteristic polynomial";
    specs.push_back(std::move(s));
  }
  {
    Builder host = h6_host();
    host.edge("11", "y3");
    Spec s{"h6_1", from_host(host, kH6Marked), {Claim::equals_one(9)}};
    s.removed = {"3", "x4", "6", "7", "12", "x2", "y2"};
    s.residual_name = "c6";
    s.residual = cycle_graph(6);
    s.constraints = "h6_0 host plus the chord 11-y3; the chord position is assumed";
    specs.push_back(std::move(s));
  }
  {
    Builder host = h6_host();
    host.edge("11", "y3").edge("12", "x2");
    Spec s{"h6_2", from_host(host, kH6Marked), {Claim::equals_one(9), Claim::equals_one(8)}};
    s.removed = {"3", "x4", "6", "7", "12", "x2", "y2"};
    s.residual_name = "c6";
    s.residual = cycle_graph(6);
    s.constraints = "h6_0 host plus chords 11-y3 and 12-x2; pinned by lambda_8 = 1";
    specs.push_back(std::move(s));
  }
  {
    Builder host = h6_host();
    host.path({"x3", "s", "y3"});
    Spec s{"h6_star", from_host(host, kH6Marked), {Claim::equals_one(9)}};
    s.removed = {"3", "4", "12", "x2", "s"};
    s.constraints = "h6_0 host with x3 and y3 sharing a new neighbour; the shared vertex is assumed";
    specs.push_back(std::move(s));
  }
  {
    Builder host = h0_host();
    host.path({"3", "13", "14", "12"}).path({"4", "15", "16", "11"});
    host.path({"7", "y1", "y2", "y3", "y4", "8"});
    Spec s{"h7_hat",
           from_host(host, {"1", "3", "5", "7", "11", "14", "15", "y2", "y4"}),
           {Claim::equals_one(9)}};
    s.removed = {"2", "12", "4", "13", "16", "y2"};
    s.residual_name = "path on 6 vertices with pendants on the inner vertices";
    s.residual = path_with_pendants(5, 0, true);
    s.residual_char_poly = poly({0, 0, 4, 0, -20, 0, 24, 0, -9, 0, 1});
    s.constraints = "pinned by the residual characteristic polynomial";
    specs.push_back(std::move(s));
  }
  {
    Builder host = claim6_host(2);
    Spec s{"h12", from_host(host, class_of(host, "v1")), {Claim::less_than(9, Rational(95, 100))}};
    s.removed = {"u1", "a2", "a4", "b2", "b4", "v3"};
    s.residual_name = "p7_minus";
    s.residual = p7_minus_graph();
    s.constraints = "hexagon with hexagons hung from two adjacent vertices; class of v1";
    specs.push_back(std::move(s));
  }
  {
    Builder host = claim6_host(3);
    Spec s{"h13", from_host(host, class_of(host, "v1")), {Claim::equals_one(9)}};
    s.removed = {"u1", "a2", "a4", "u3", "b2", "b4"};
    s.residual_name = "c6_plus";
    s.residual = c6_plus_graph();
    s.constraints = "hexagons hung from vertices at distance 2; class of v1";
    specs.push_back(std::move(s));
  }
  {
    Builder host = claim6_host(4);
    Spec s{"h14", from_host(host, class_of(host, "v1")), {Claim::less_than(9, Rational(96, 100))}};
    s.removed = {"u1", "a2", "a4", "b2", "b4"};
    s.constraints = "hexagons hung from opposite vertices; class of v1";
    specs.push_back(std::move(s));
  }
  {
    Builder host = claim6_host(2);
    host.edge("a3", "b3");
    Spec s{"h12_prime", from_host(host, class_of(host, "v1")),
           {Claim::equals_one(9), Claim::equals_one(8)}};
    s.removed = {"u1", "a2", "a4", "b2", "b4", "v3"};
    s.residual_name = "p7_minus";
    s.residual = p7_minus_graph();
    s.constraints =
        "h12 host plus the edge a3-b3, the only added edge giving lambda_8 = lambda_9 = 1";
    specs.push_back(std::move(s));
  }
  {
    Builder host = hexagon_d();
    for (auto [i, j] : {std::pair{1, 2}, std::pair{3, 4}, std::pair{5, 6}}) {
      auto n = [](const char* p, int k) { return p + std::to_string(k); };
      host.path({n("v", i), n("u", i), n("p", i), n("q", i), n("u", j), n("v", j)});
    }
    Spec s{"h123", from_host(host, class_of(host, "v1")),
           {Claim::equals_one(9), Claim::equals_one(8)}};
    s.eigenvector = {{"u1", 1},  {"q1", -1}, {"p3", -1}, {"p5", 1}, {"u5", -1},
                     {"q5", 1},  {"u2", -1}, {"v2", 1},  {"u4", 1}, {"v6", -1},
                     {"v1", 1},  {"v3", 1},  {"v5", -2}};
    s.constraints = "hexagon with three 5-paths joining v1-v2, v3-v4 and v5-v6; class of v1";
    specs.push_back(std::move(s));
  }
  {
    Builder host = hexagon_d();
    host.path({"v4", "w5", "w6", "v1"});
    host.path({"v2", "f1", "f2", "f3", "f4", "v3"});
    host.path({"v5", "g1", "g2", "g3", "g4", "v6"});
    host.path({"w5", "h1", "h2", "h3", "h4", "w6"});
    Spec s{"l33_hat", from_host(host, class_of(host, "v1")),
           {Claim::less_than(10, Rational(92, 100))}};
    s.removed = {"v2", "f2", "f4", "g2", "h2", "v5", "w5"};
    s.residual_name = "p7_minus";
    s.residual = p7_minus_graph();
    s.constraints = "two hexagons sharing v1-v4 via w5, w6, each ear capped by a hexagon; class of v1";
    specs.push_back(std::move(s));
  }

  std::vector<CatalogEntry> out;
  for (auto& s : specs) out.push_back(finish(std::move(s)));
  for (std::size_t t = 0; t <= 8; ++t) out.push_back(p_hat(t));
  return out;
}

std::string claim_text(const Claim& c) {
  std::string k = "lambda_" + std::to_string(c.k);
  return c.kind == ClaimKind::equals_one ? k + " = 1" : k + " < " + to_string(c.bound);
}

CheckResult check_claim(const Graph& g, const Claim& c) {
  CheckResult r{"claim " + claim_text(c), false, {}};
  if (c.k < 1 || c.k > g.order()) {
    r.detail = "index outside 1..n";
    return r;
  }
  auto in = inertia(g, c.bound);
  std::ostringstream d;
  d << "inertia at " << to_string(c.bound) << ": greater " << in.greater << ", equal " << in.equal
    << ", less " << in.less;
  if (c.kind == ClaimKind::equals_one) {
    r.ok = in.greater <= c.k - 1 && in.greater + in.equal >= c.k;
  } else {
    double lam = eigenvalues_only(g)[c.k - 1];
    d << "; float lambda_" << c.k << " = " << lam;
    r.ok = in.greater <= c.k - 1 && lam < c.bound.get_d() - 1e-6;
  }
  r.detail = d.str();
  return r;
}

}  // namespace

std::optional<Vertex> CatalogEntry::vertex(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

Graph p7_minus_graph() {
  Builder b;
  b.path({"a1", "a2", "a3", "a4", "a5"});
  b.edge("a1", "l1").edge("a1", "l2").edge("a5", "l3").edge("a5", "l4");
  return b.graph();
}

Graph c6_plus_graph() {
  Builder b = hexagon_d();
  b.edge("v1", "v1'");
  return b.graph();
}

CatalogEntry p_hat(std::size_t t) {
  Builder b;
  auto vs = numbered("v", 1, static_cast<int>(2 * t + 1));
  b.id(vs.front());
  b.path(vs);
  Spec s;
  s.name = "p_hat_" + std::to_string(t);
  s.provenance = Provenance::text_pinned;
  s.claims = {Claim::equals_one(t + 1)};
  std::map<std::string, int> x;
  for (std::size_t i = 0; i < vs.size(); i += 2) {
    b.edge(vs[i], vs[i] + "'");
    s.draft.marked.push_back(vs[i]);
    int sign = (i / 2) % 2 == 0 ? 1 : -1;
    x[vs[i]] = sign;
    x[vs[i] + "'"] = sign;
  }
  s.draft.b = b;
  s.eigenvector = x;
  for (std::size_t i = 1; i < vs.size(); i += 2) s.removed.push_back(vs[i]);
  s.residual_name = "matching";
  s.constraints = "odd path vertices carry the pendants";
  return finish(std::move(s));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::optional<CatalogEntry> find_entry(std::string_view name) {
  if (name.starts_with("p_hat_")) {
    std::size_t t = 0;
    auto digits = name.substr(6);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      return std::nullopt;
    }
    return p_hat(t);
  }
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

bool EntryReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

EntryReport verify_entry(const CatalogEntry& e) {
  EntryReport rep{e.name, {}};
  const Graph& g = e.graph;

  {
    CheckResult r{"bipartite subcubic", is_bipartite(g) && g.max_degree() <= 3, {}};
    if (!r.ok) r.detail = "graph is not bipartite with maximum degree 3";
    rep.checks.push_back(r);
  }
  {
    CheckResult r{"marked set", !e.marked.empty() && e.marked.within(g.order()), {}};
    if (r.ok) {
      for (Vertex u : e.marked) {
        for (Vertex w : g.neighbors(u)) {
          if (e.marked.contains(w)) {
            r.ok = false;
            r.detail = "marked vertices " + e.labels[u] + " and " + e.labels[w] + " are adjacent";
          }
        }
      }
    } else {
      r.detail = "marked set empty or out of range";
    }
    rep.checks.push_back(r);
  }
  for (const auto& c : e.claims) rep.checks.push_back(check_claim(g, c));
  {
    auto rest = delete_vertices(g, e.marked).graph;
    CheckResult r{"lambda_1(G - marked) <= 1", true, {}};
    if (rest.order() > 0) {
      auto in = inertia(rest, 1);
      r.ok = in.greater == 0;
      r.detail = std::to_string(in.greater) + " eigenvalues above 1";
    }
    rep.checks.push_back(r);
  }
  if (e.certificate) {
    CheckResult r{"eigenvector", false, {}};
    try {
      r.ok = check_eigenvector(g, e.certificate->vector, e.certificate->eigenvalue);
      if (!r.ok) {
        std::ostringstream d;
        for (Vertex v = 0; v < g.order(); ++v) {
          Rational sum = 0;
          for (Vertex w : g.neighbors(v)) sum += e.certificate->vector[w];
          if (sum != e.certificate->eigenvalue * e.certificate->vector[v]) {
            d << e.labels[v] << ": (Ax) = " << to_string(sum)
              << ", lambda x = " << to_string(e.certificate->eigenvalue * e.certificate->vector[v])
              << "; ";
          }
        }
        r.detail = d.str();
      }
    } catch (const std::exception& ex) {
      r.detail = ex.what();
    }
    rep.checks.push_back(r);
  }
  if (e.recipe) {
    const auto& rc = *e.recipe;
    auto rest = delete_vertices(g, rc.removed);
    CheckResult shape{"recipe residual " + rc.residual_name, true, {}};
    std::optional<Graph> big;
    std::size_t big_count = 0;
    for (const auto& comp : connected_components(rest.graph)) {
      if (comp.size() <= 2) continue;
      ++big_count;
      big = induced_subgraph(rest.graph, comp).graph;
    }
    if (rc.residual) {
      shape.ok = big_count == 1 && are_isomorphic(*big, *rc.residual);
      if (!shape.ok) {
        shape.detail = std::to_string(big_count) + " components with more than two vertices";
      }
    } else if (rc.residual_name == "matching") {
      shape.ok = big_count == 0;
      if (!shape.ok) shape.detail = "a component has more than two vertices";
    }
    rep.checks.push_back(shape);

    const Claim& head = e.claims.front();
    CheckResult count{"recipe interlacing count", false, {}};
    auto in = inertia(rest.graph, 1);
    if (head.k > rc.removed.size()) {
      std::size_t index = head.k - rc.removed.size();
      count.ok = in.greater <= index - 1;
      count.detail = "lambda_" + std::to_string(index) + "(G - S) <= 1 needs at most " +
                     std::to_string(index - 1) + " eigenvalues above 1, found " +
                     std::to_string(in.greater);
    } else {
      count.detail = "more vertices removed than the claim index";
    }
    rep.checks.push_back(count);

    if (rc.residual_char_poly) {
      CheckResult cp{"recipe residual characteristic polynomial", false, {}};
      if (big) {
        cp.ok = char_poly(*big) == *rc.residual_char_poly;
        if (!cp.ok) cp.detail = "polynomial differs";
      } else {
        cp.detail = "no residual component";
      }
      rep.checks.push_back(cp);
    }
  }
  return rep;
}

}  // namespace hl
