#pragma once

#include <string>
#include <vector>

#include "hlindex/graph.hpp"

namespace hl {

/// Canonical relabelling by individualisation-refinement: canon[v] is the new
/// label of v. Isomorphic graphs map to identical relabelled graphs.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// graph6 text of the canonically relabelled graph; equal iff isomorphic.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Screens by order, regularity, bipartiteness and girth before comparing
/// canonical forms.
bool is_heawood(const Graph& g);

}  // namespace hl
