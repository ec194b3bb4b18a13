#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lagrangia/hypergraph.hpp"

namespace lagrangia {

/// Maximum number of pairwise disjoint edges. Exact branch and bound; a
/// greedy matching seeds the lower bound.
int matching_number(const Hypergraph& g);

/// matching_number(g) >= t, stopping as soon as t disjoint edges are found.
bool has_matching(const Hypergraph& g, int t);

/// Largest p such that some p-set has all its r-subsets as edges.
/// An edgeless graph reports r-1.
int clique_number(const Hypergraph& g);
bool has_clique(const Hypergraph& g, int p);

/// Injective map V(F) -> V(G) sending edges to edges; image[u-1] is the
/// vertex of G that u lands on.
struct Embedding {
    std::vector<Vertex> image;
};

/// Visits embeddings of f into g until the visitor returns false.
/// With `require_covered_image`, every pair of image vertices must also be
/// covered by an edge of g (the weak-extension core condition).
void for_each_embedding(const Hypergraph& g, const Hypergraph& f,
                        const std::function<bool(const Embedding&)>& visit,
                        bool require_covered_image = false);

std::optional<Embedding> find_subgraph(const Hypergraph& g, const Hypergraph& f);
bool has_subgraph(const Hypergraph& g, const Hypergraph& f);

/// A p-set C of g whose induced subgraph holds a copy of f and in which
/// every pair is covered by an edge of g, i.e. g contains a weak extension
/// of f with a core of size p. Returns the core.
std::optional<VertexSet> find_weak_extension(const Hypergraph& g, const Hypergraph& f, int p);
bool contains_weak_extension(const Hypergraph& g, const Hypergraph& f, int p);

bool is_vertex_cover(const Hypergraph& g, VertexSet s);

/// Returns a value of lambda for a graph; see lagrangian.hpp for the
/// optimizer-backed implementation.
using LagrangianOracle = std::function<double(const Hypergraph&)>;

enum class DensityStatus { dense, not_dense, inconclusive };

struct DensityOptions {
    /// Every single-vertex deletion must lose more than this.
    double tol = 1e-7;
    /// A deletion losing at most this much keeps the Lagrangian.
    double equality_tol = 1e-10;
};

struct DensityReport {
    DensityStatus status = DensityStatus::dense;
    double lambda = 0.0;
    /// lambda(G - v) for v = 1..n.
    std::vector<double> deleted;
    /// The vertex with the smallest loss, 0 when n = 0.
    Vertex weakest = 0;
    double min_gap = 0.0;
};

/// Deleting a single vertex suffices by monotonicity of lambda.
DensityReport is_dense(const Hypergraph& g, const LagrangianOracle& lambda, const DensityOptions& options = {});

const char* to_string(DensityStatus s);

}  // namespace lagrangia
