#pragma once

#include <nlohmann/json.hpp>

#include "hlindex/catalog.hpp"
#include "hlindex/graph.hpp"
#include "hlindex/imbalance.hpp"
#include "hlindex/inertia.hpp"
#include "hlindex/poly.hpp"
#include "hlindex/spectra.hpp"

// Rationals are written as "p/q" strings, integers as decimal strings when
// they may exceed 64 bits, vertex sets as sorted arrays.
namespace hl {

using Json = nlohmann::json;

void to_json(Json& j, const VertexSet& s);
void from_json(const Json& j, VertexSet& s);

void to_json(Json& j, const InertiaCount& c);
void from_json(const Json& j, InertiaCount& c);

void to_json(Json& j, const MedianReport& m);
void to_json(Json& j, const Spectrum& s);
void to_json(Json& j, const IntPoly& p);
void from_json(const Json& j, IntPoly& p);

void to_json(Json& j, const ImbalanceReport& r);
void to_json(Json& j, const MedianBound& b);

/// {side, c_set, q_vertices, q_inertia:{threshold, greater, equal, less}, imb_before, imb_after}
void to_json(Json& j, const IncreaseCertificate& c);
void from_json(const Json& j, IncreaseCertificate& c);

void to_json(Json& j, const SearchResult& r);
void to_json(Json& j, const PipelineReport& r);

void to_json(Json& j, const Claim& c);
void from_json(const Json& j, Claim& c);

/// Self-contained record: graph6, labels, marked labels, claims, provenance,
/// certificate and recipe. from_json rebuilds an entry that verify_entry can
/// check without the built-in constructors.
void to_json(Json& j, const CatalogEntry& e);
void from_json(const Json& j, CatalogEntry& e);

void to_json(Json& j, const EntryReport& r);

}  // namespace hl
