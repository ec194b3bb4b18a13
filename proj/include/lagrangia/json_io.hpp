#pragma once

#include "json.hpp"

#include "lagrangia/algorithms.hpp"
#include "lagrangia/hypergraph.hpp"
#include "lagrangia/lagrangian.hpp"
#include "lagrangia/rational.hpp"

namespace lagrangia {

using Json = nlohmann::ordered_json;

/// {"r", "n", "edges": [[1,2,3], ...]}
Json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const Json& j);

/// {value, witness, kkt_residual, restarts, bounded_by, seed} plus
/// `infeasible` when set. bounded_by is null without a bound.
Json to_json(const LagrangianResult& result);

/// Exact value as "p/q" next to its double.
Json to_json(const Rational& q);

Json to_json(const CompressionTrace& trace);
Json to_json(const SymmetrizationTrace& trace);

}  // namespace lagrangia
