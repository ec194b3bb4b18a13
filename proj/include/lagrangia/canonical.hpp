#pragma once

#include <string>
#include <vector>

#include "lagrangia/hypergraph.hpp"

namespace lagrangia {

/// Canonical relabeling: vertex v of g maps to result[v-1].
///
/// Exact: colour refinement followed by individualization over every
/// non-singleton cell, keeping the smallest relabeled edge list. Branches
/// that differ by swapping twin vertices are explored once, which keeps
/// complete graphs, blowups and empty graphs cheap.
std::vector<Vertex> canonical_labeling(const Hypergraph& g);

Hypergraph canonical_form(const Hypergraph& g);

/// Byte string equal for two graphs exactly when they are isomorphic
/// (same r and n required).
std::string canonical(const Hypergraph& g);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Inverse of canonical(): the canonical representative.
Hypergraph from_canonical(const std::string& key);

}  // namespace lagrangia
