#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lagrangia/hypergraph.hpp"
#include "lagrangia/lagrangian.hpp"
#include "lagrangia/rational.hpp"

namespace lagrangia {

struct CompressionStep {
    enum class Kind { compress, dense_subgraph, recompute_optimum };
    Kind kind = Kind::compress;
    /// compress: the shift pi_ij, labels of the current graph.
    Vertex i = 0, j = 0;
    /// dense_subgraph: kept vertices of the current graph (relabeled afterwards).
    VertexSet kept = 0;
    /// Termination metric before and after: the order-weighted s-value for
    /// compressions, the vertex count for subgraph steps, lambda * 1e12
    /// rounded for recomputations (informational only).
    long long before = 0, after = 0;
};

struct CompressionTrace {
    std::vector<CompressionStep> steps;
};

const char* to_string(CompressionStep::Kind kind);

/// Replays compressions and subgraph steps; recompute steps are no-ops.
Hypergraph replay(const Hypergraph& g, const CompressionTrace& trace);

/// Vertices sorted by weight, heaviest first; ties keep label order.
template <class Scalar>
std::vector<Vertex> weight_order(std::span<const Scalar> x);

struct LeftCompression {
    Hypergraph graph;
    std::vector<Vertex> order;
    CompressionTrace trace;
};

/// Applies pi_ij while some i ahead of j in the weight order has x_i > x_j
/// and a nonempty L(j \ i), always taking the first such pair by position.
LeftCompression left_compress_to_fixpoint(const Hypergraph& g, std::span<const double> x);
LeftCompression left_compress_to_fixpoint(const Hypergraph& g, std::span<const Rational> x);

struct DenseCompressedOptions {
    OptimizerConfig optimizer;
    /// Coordinates at or below this count as zero when restricting to a support.
    double support_eps = 1e-9;
    /// A vertex whose deletion loses at most this much is dropped.
    double deletion_tol = 1e-9;
    /// Weights within this of each other are treated as tied.
    double tie_eps = 1e-9;
    int max_steps = 10000;
    /// Optional family test, evaluated after every phase.
    std::function<bool(const Hypergraph&)> family;
};

struct DenseCompressed {
    Hypergraph graph;
    /// original[k-1]: vertex of the input that vertex k descends from.
    std::vector<Vertex> original;
    std::vector<double> y;
    double value = 0.0;
    /// lambda of the input, as first computed.
    double input_value = 0.0;
    CompressionTrace trace;
    /// Trace positions after which the family test failed.
    std::vector<std::size_t> family_violations;
    bool converged = true;
};

/// Alternates support restriction (to a vertex-minimal subgraph keeping
/// lambda) with single y-compressions until the graph is dense and
/// y-compressed.
DenseCompressed dense_compressed_subgraph(const Hypergraph& g, const DenseCompressedOptions& options = {});

/// Minimum degree >= alpha * C(n-1, r-1).
bool is_alpha_dense(const Hypergraph& g, double alpha);

/// Classes of vertices with identical links (vertex sets, by smallest member).
std::vector<VertexSet> equivalence_classes(const Hypergraph& g);

struct SymmetrizationStep {
    enum class Kind { symmetrize, clean };
    Kind kind = Kind::symmetrize;
    /// Original labels. symmetrize: class `moved` (containing v) takes u's link.
    Vertex u = 0, v = 0;
    VertexSet moved = 0;
    /// clean: the deleted vertex.
    Vertex removed = 0;
    std::size_t edges_before = 0, edges_after = 0;
    int min_degree_after = 0;
};

struct SymmetrizationTrace {
    std::vector<SymmetrizationStep> steps;
};

const char* to_string(SymmetrizationStep::Kind kind);

struct SymmetrizeOptions {
    double alpha = 0.5;
    int max_iterations = 100000;
};

struct Symmetrized {
    /// G*, relabeled; original[k-1] is its label in the input.
    Hypergraph graph;
    std::vector<Vertex> original;
    /// Z_1..Z_k in original labels, one per iteration.
    std::vector<VertexSet> removed;
    SymmetrizationTrace trace;
    int iterations = 0;
    bool converged = true;
};

/// Symmetrization and cleaning with threshold alpha. Pairs are chosen by
/// (degree desc, label asc); cleaning deletes a minimum-degree vertex with
/// the smallest label, or a vertex of the moved class when the minimum sits
/// in u's old class. A graph that loses all its edges is emptied.
Symmetrized symmetrize_and_clean(const Hypergraph& g, const SymmetrizeOptions& options = {});

/// Rebuilds G* (relabeled, as in Symmetrized::graph) from the trace.
Hypergraph replay(const Hypergraph& g, const SymmetrizationTrace& trace);

/// True when g is a blowup of g[S], S one vertex per equivalence class.
bool is_blowup_of_representatives(const Hypergraph& g);

}  // namespace lagrangia
