#include "lagrangia/json_io.hpp"

namespace lagrangia {

Json to_json(const Hypergraph& g) {
    Json j;
    j["r"] = g.uniformity();
    j["n"] = g.order();
    j["edges"] = g.edge_lists();
    return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
    return Hypergraph::build(j.at("r").get<int>(), j.at("n").get<int>(),
                             j.at("edges").get<std::vector<std::vector<Vertex>>>());
}

Json to_json(const LagrangianResult& result) {
    Json j;
    j["value"] = result.value;
    j["witness"] = std::vector<double>(result.witness.values().begin(), result.witness.values().end());
    j["kkt_residual"] = result.kkt_residual;
    j["restarts"] = result.restarts;
    j["bounded_by"] = result.bounded_by ? Json(*result.bounded_by) : Json(nullptr);
    j["seed"] = result.seed;
    if (result.infeasible) j["infeasible"] = true;
    return j;
}

Json to_json(const Rational& q) {
    Json j;
    j["exact"] = q.get_str();
    j["value"] = to_double(q);
    return j;
}

Json to_json(const CompressionTrace& trace) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json j;
        j["op"] = to_string(s.kind);
        switch (s.kind) {
            case CompressionStep::Kind::compress:
                j["i"] = s.i;
                j["j"] = s.j;
                j["s_before"] = s.before;
                j["s_after"] = s.after;
                break;
            case CompressionStep::Kind::dense_subgraph:
                j["kept"] = members(s.kept);
                j["vertices_before"] = s.before;
                j["vertices_after"] = s.after;
                break;
            case CompressionStep::Kind::recompute_optimum:
                j["lambda_before"] = static_cast<double>(s.before) * 1e-12;
                j["lambda_after"] = static_cast<double>(s.after) * 1e-12;
                break;
        }
        steps.push_back(std::move(j));
    }
    return steps;
}

Json to_json(const SymmetrizationTrace& trace) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json j;
        j["op"] = to_string(s.kind);
        if (s.kind == SymmetrizationStep::Kind::symmetrize) {
            j["u"] = s.u;
            j["v"] = s.v;
            j["moved"] = members(s.moved);
        } else {
            j["removed"] = s.removed;
        }
        j["edges_before"] = s.edges_before;
        j["edges_after"] = s.edges_after;
        j["min_degree_after"] = s.min_degree_after;
        steps.push_back(std::move(j));
    }
    return steps;
}

}  // namespace lagrangia
