#include "hlindex/json.hpp"

#include "hlindex/io.hpp"

namespace hl {
namespace {

Json rational(const Rational& r) { return to_string(r); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

std::string outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found:
      return "found";
    case SearchOutcome::exhausted:
      return "exhausted";
    case SearchOutcome::refused:
      return "refused";
  }
  return "unknown";
}

Json labelled(const VertexSet& s, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(labels.at(v));
  return out;
}

VertexSet unlabelled(const Json& j, const CatalogEntry& e) {
  std::vector<Vertex> out;
  for (const auto& label : j) {
    auto v = e.vertex(label.get<std::string>());
    if (!v) throw std::invalid_argument(e.name + ": unknown vertex label " + label.dump());
    out.push_back(*v);
  }
  return VertexSet(std::move(out));
}

}  // namespace

void to_json(Json& j, const VertexSet& s) { j = s.members(); }

void from_json(const Json& j, VertexSet& s) { s = VertexSet(j.get<std::vector<Vertex>>()); }

void to_json(Json& j, const InertiaCount& c) {
  j = Json{{"threshold", rational(c.threshold)},
           {"greater", c.greater},
           {"equal", c.equal},
           {"less", c.less}};
}

void from_json(const Json& j, InertiaCount& c) {
  c.threshold = rational_from(j.at("threshold"));
  c.greater = j.at("greater").get<std::size_t>();
  c.equal = j.at("equal").get<std::size_t>();
  c.less = j.at("less").get<std::size_t>();
}

void to_json(Json& j, const MedianReport& m) {
  j = Json{{"n", m.n},
           {"h", m.h},
           {"ell", m.ell},
           {"lambda_h", m.lambda_h},
           {"lambda_ell", m.lambda_ell},
           {"hl_index", m.hl_index},
           {"exact_at_most_one", m.exact_at_most_one}};
}

void to_json(Json& j, const Spectrum& s) {
  j = Json{{"values", s.values}, {"residual_bound", s.residual_bound}};
}

void to_json(Json& j, const IntPoly& p) {
  j = Json::array();
  for (const auto& c : p.coeffs) j.push_back(c.get_str());
}

void from_json(const Json& j, IntPoly& p) {
  p.coeffs.clear();
  for (const auto& c : j) {
    p.coeffs.emplace_back(c.is_number_integer() ? Integer(c.get<long>()) : Integer(c.get<std::string>()));
  }
}

void to_json(Json& j, const ImbalanceReport& r) { j = Json{{"s", r.s}, {"t", r.t}, {"imb", r.imb}}; }

void to_json(Json& j, const MedianBound& b) {
  j = Json{{"r", b.r}, {"index", b.index}, {"certified", b.certified}};
}

void to_json(Json& j, const IncreaseCertificate& c) {
  j = Json{{"side", c.side == Side::a ? "A" : "B"},
           {"c_set", c.c_set},
           {"q_vertices", c.q_vertices},
           {"q_inertia", c.q_inertia},
           {"imb_before", c.imb_before},
           {"imb_after", c.imb_after}};
}

void from_json(const Json& j, IncreaseCertificate& c) {
  const auto side = j.at("side").get<std::string>();
  if (side != "A" && side != "B") throw std::invalid_argument("certificate side must be A or B");
  c.side = side == "A" ? Side::a : Side::b;
  c.c_set = j.at("c_set").get<VertexSet>();
  c.q_vertices = j.at("q_vertices").get<VertexSet>();
  c.q_inertia = j.at("q_inertia").get<InertiaCount>();
  c.imb_before = j.at("imb_before").get<long>();
  c.imb_after = j.at("imb_after").get<long>();
}

void to_json(Json& j, const SearchResult& r) {
  j = Json{{"outcome", outcome_name(r.outcome)},
           {"strategy", r.strategy},
           {"radius_reached", r.radius_reached},
           {"size_reached", r.size_reached},
           {"candidates_a", r.candidates_a},
           {"candidates_b", r.candidates_b},
           {"budget_exhausted", r.budget_exhausted}};
  if (r.certificate) j["certificate"] = *r.certificate;
  if (!r.reason.empty()) j["reason"] = r.reason;
}

void to_json(Json& j, const PipelineReport& r) {
  Json per_vertex = Json::array();
  for (const auto& o : r.outcomes) {
    per_vertex.push_back(Json{{"v", o.v}, {"dropped", o.dropped}, {"search", o.result}});
  }
  j = Json{{"v0_set", r.v0_set},
           {"outcomes", per_vertex},
           {"a", r.a},
           {"b", r.b},
           {"failures", r.failures},
           {"imb_ab", r.imb_ab},
           {"imb_ba", r.imb_ba},
           {"imb_a_moved", r.imb_a_moved},
           {"imb_b_moved", r.imb_b_moved},
           {"checks",
            {{"base_sum", r.base_sum_ok},
             {"a_side", r.a_side_ok},
             {"b_side", r.b_side_ok},
             {"sum", r.sum_ok},
             {"all_succeeded", r.all_succeeded},
             {"total", r.total_ok},
             {"count_consistent", r.count_consistent}}},
           {"final_imb", r.final_imb},
           {"bound", r.bound},
           {"implied_count", r.implied_count},
           {"eigen_interval_count", r.eigen_interval_count},
           {"conforming", r.conforming},
           {"separation", r.separation},
           {"radius", r.radius},
           {"epsilon", rational(r.epsilon)},
           {"delta", rational(r.delta)},
           {"ok", r.ok()}};
}

void to_json(Json& j, const Claim& c) {
  j = Json{{"k", c.k}, {"kind", c.kind == ClaimKind::equals_one ? "equals_one" : "less_than"}};
  if (c.kind == ClaimKind::less_than) j["bound"] = rational(c.bound);
}

void from_json(const Json& j, Claim& c) {
  c.k = j.at("k").get<std::size_t>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "equals_one") {
    c = Claim::equals_one(c.k);
  } else if (kind == "less_than") {
    c = Claim::less_than(c.k, rational_from(j.at("bound")));
  } else {
    throw std::invalid_argument("unknown claim kind " + kind);
  }
}

void to_json(Json& j, const CatalogEntry& e) {
  j = Json{{"name", e.name},
           {"graph6", graph6_encode(e.graph)},
           {"labels", e.labels},
           {"marked", labelled(e.marked, e.labels)},
           {"claims", e.claims},
           {"provenance", e.provenance == Provenance::text_pinned ? "text_pinned" : "reconstructed"},
           {"constraints", e.constraints}};
  if (e.certificate) {
    Json vec = Json::object();
    for (Vertex v = 0; v < e.graph.order(); ++v) {
      if (e.certificate->vector[v] != 0) vec[e.labels[v]] = rational(e.certificate->vector[v]);
    }
    j["certificate"] = Json{{"eigenvalue", rational(e.certificate->eigenvalue)}, {"vector", vec}};
  }
  if (e.recipe) {
    Json r{{"removed", labelled(e.recipe->removed, e.labels)},
           {"residual_name", e.recipe->residual_name}};
    if (e.recipe->residual) r["residual_graph6"] = graph6_encode(*e.recipe->residual);
    if (e.recipe->residual_char_poly) r["residual_char_poly"] = *e.recipe->residual_char_poly;
    j["recipe"] = r;
  }
}

void from_json(const Json& j, CatalogEntry& e) {
  e = CatalogEntry{};
  e.name = j.at("name").get<std::string>();
  e.graph = graph6_decode(j.at("graph6").get<std::string>());
  e.labels = j.at("labels").get<std::vector<std::string>>();
  if (e.labels.size() != e.graph.order()) {
    throw std::invalid_argument(e.name + ": label count does not match the graph order");
  }
  e.marked = unlabelled(j.at("marked"), e);
  e.claims = j.at("claims").get<std::vector<Claim>>();
  if (e.claims.empty()) throw std::invalid_argument(e.name + ": no claims");
  const auto prov = j.at("provenance").get<std::string>();
  if (prov != "text_pinned" && prov != "reconstructed") {
    throw std::invalid_argument(e.name + ": unknown provenance " + prov);
  }
  e.provenance = prov == "text_pinned" ? Provenance::text_pinned : Provenance::reconstructed;
  e.constraints = j.value("constraints", "");
  if (j.contains("certificate")) {
    const auto& c = j.at("certificate");
    EigenCertificate cert;
    cert.eigenvalue = rational_from(c.at("eigenvalue"));
    cert.vector.assign(e.graph.order(), Rational(0));
    for (const auto& [label, value] : c.at("vector").items()) {
      auto v = e.vertex(label);
      if (!v) throw std::invalid_argument(e.name + ": unknown vertex label " + label);
      cert.vector[*v] = rational_from(value);
    }
    e.certificate = std::move(cert);
  }
  if (j.contains("recipe")) {
    const auto& r = j.at("recipe");
    ReductionRecipe recipe;
    recipe.removed = unlabelled(r.at("removed"), e);
    recipe.residual_name = r.at("residual_name").get<std::string>();
    if (r.contains("residual_graph6")) {
      recipe.residual = graph6_decode(r.at("residual_graph6").get<std::string>());
    }
    if (r.contains("residual_char_poly")) recipe.residual_char_poly = r.at("residual_char_poly").get<IntPoly>();
    e.recipe = std::move(recipe);
  }
}

void to_json(Json& j, const EntryReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"check", c.check}, {"ok", c.ok}, {"detail", c.detail}});
  }
  j = Json{{"name", r.name}, {"ok", r.ok()}, {"checks", checks}};
}

}  // namespace hl
