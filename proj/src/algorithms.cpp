#include "lagrangia/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lagrangia {

const char* to_string(CompressionStep::Kind kind) {
    switch (kind) {
        case CompressionStep::Kind::compress: return "compress";
        case CompressionStep::Kind::dense_subgraph: return "dense-subgraph";
        case CompressionStep::Kind::recompute_optimum: return "recompute-optimum";
    }
    return "?";
}

const char* to_string(SymmetrizationStep::Kind kind) {
    switch (kind) {
        case SymmetrizationStep::Kind::symmetrize: return "symmetrize";
        case SymmetrizationStep::Kind::clean: return "clean";
    }
    return "?";
}

Hypergraph replay(const Hypergraph& g, const CompressionTrace& trace) {
    Hypergraph cur = g;
    for (const auto& step : trace.steps) {
        switch (step.kind) {
            case CompressionStep::Kind::compress: cur = compress(cur, step.i, step.j); break;
            case CompressionStep::Kind::dense_subgraph: cur = induced(cur, step.kept).graph; break;
            case CompressionStep::Kind::recompute_optimum: break;
        }
    }
    return cur;
}

template <class Scalar>
std::vector<Vertex> weight_order(std::span<const Scalar> x) {
    std::vector<Vertex> order(x.size());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a - 1] > x[b - 1]; });
    return order;
}

template std::vector<Vertex> weight_order<double>(std::span<const double>);
template std::vector<Vertex> weight_order<Rational>(std::span<const Rational>);

namespace {

template <class Scalar>
LeftCompression left_compress_impl(const Hypergraph& g, std::span<const Scalar> x) {
    if (static_cast<int>(x.size()) != g.order())
        throw LagrangianError("weight vector has " + std::to_string(x.size()) + " entries, graph has " +
                              std::to_string(g.order()) + " vertices");
    LeftCompression out{g, weight_order(x), {}};
    const auto& order = out.order;
    const std::size_t n = order.size();
    for (;;) {
        bool found = false;
        for (std::size_t a = 0; a < n && !found; ++a) {
            for (std::size_t b = a + 1; b < n && !found; ++b) {
                const Vertex i = order[a], j = order[b];
                if (!(x[i - 1] > x[j - 1])) continue;
                if (link_diff(out.graph, j, i).empty()) continue;
                CompressionStep step;
                step.kind = CompressionStep::Kind::compress;
                step.i = i;
                step.j = j;
                step.before = s_value(out.graph, order);
                out.graph = compress(out.graph, i, j);
                step.after = s_value(out.graph, order);
                out.trace.steps.push_back(step);
                found = true;
            }
        }
        if (!found) return out;
    }
}

}  // namespace

LeftCompression left_compress_to_fixpoint(const Hypergraph& g, std::span<const double> x) {
    return left_compress_impl(g, x);
}

LeftCompression left_compress_to_fixpoint(const Hypergraph& g, std::span<const Rational> x) {
    return left_compress_impl(g, x);
}

namespace {

/// Weight order where runs of values within `eps` of their neighbour are
/// put back in label order.
std::vector<Vertex> tolerant_order(std::span<const double> y, double eps) {
    std::vector<Vertex> order = weight_order(y);
    std::size_t start = 0;
    for (std::size_t k = 1; k <= order.size(); ++k) {
        if (k == order.size() || y[order[k - 1] - 1] - y[order[k] - 1] > eps) {
            std::sort(order.begin() + start, order.begin() + k);
            start = k;
        }
    }
    return order;
}

class DenseCompressedRun {
public:
    DenseCompressedRun(const Hypergraph& g, const DenseCompressedOptions& options) : options_(options) {
        out_.graph = g;
        out_.original.resize(g.order());
        std::iota(out_.original.begin(), out_.original.end(), 1);
    }

    DenseCompressed run() {
        reoptimize({});
        out_.input_value = out_.value;
        for (;;) {
            if (!budget()) break;
            restrict_to_dense();
            check_family();
            if (!compress_once()) break;
            check_family();
        }
        return std::move(out_);
    }

private:
    bool budget() {
        if (static_cast<int>(out_.trace.steps.size()) < options_.max_steps) return true;
        out_.converged = false;
        return false;
    }

    LagrangianResult optimize(const Hypergraph& h, std::vector<double> warm) const {
        OptimizerConfig config = options_.optimizer;
        if (!warm.empty()) config.warm_starts.insert(config.warm_starts.begin(), std::move(warm));
        return maximize(h, config);
    }

    void reoptimize(std::vector<double> warm) {
        const auto res = optimize(out_.graph, std::move(warm));
        out_.value = res.value;
        out_.y.assign(res.witness.values().begin(), res.witness.values().end());
    }

    void keep(VertexSet kept, const LagrangianResult& res) {
        CompressionStep step;
        step.kind = CompressionStep::Kind::dense_subgraph;
        step.kept = kept;
        step.before = out_.graph.order();
        auto sub = induced(out_.graph, kept);
        std::vector<Vertex> original;
        for (Vertex v : sub.original) original.push_back(out_.original[v - 1]);
        out_.graph = std::move(sub.graph);
        out_.original = std::move(original);
        step.after = out_.graph.order();
        out_.trace.steps.push_back(step);
        out_.value = res.value;
        out_.y.assign(res.witness.values().begin(), res.witness.values().end());
    }

    std::vector<double> restricted(VertexSet kept) const {
        std::vector<double> w;
        for (Vertex v : members(kept)) w.push_back(out_.y[v - 1]);
        const double total = std::accumulate(w.begin(), w.end(), 0.0);
        if (total > 0.0)
            for (double& c : w) c /= total;
        else
            std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(w.size()));
        return w;
    }

    /// Step 1: shrink to a vertex-minimal subgraph with the same Lagrangian.
    void restrict_to_dense() {
        while (out_.graph.order() > 0 && budget()) {
            const int n = out_.graph.order();
            VertexSet support = 0;
            for (Vertex v = 1; v <= n; ++v)
                if (out_.y[v - 1] > options_.support_eps) support |= vertex_bit(v);
            if (support != out_.graph.vertex_set() && support != 0) {
                const auto res = optimize(induced(out_.graph, support).graph, restricted(support));
                if (res.value >= out_.value - options_.deletion_tol) {
                    keep(support, res);
                    continue;
                }
            }
            // Support is everything: look for a vertex whose removal keeps lambda.
            std::optional<LagrangianResult> best;
            VertexSet best_kept = 0;
            for (Vertex v = 1; v <= n; ++v) {
                const VertexSet kept = out_.graph.vertex_set() & ~vertex_bit(v);
                auto res = optimize(induced(out_.graph, kept).graph, kept ? restricted(kept) : std::vector<double>{});
                if (res.value >= out_.value - options_.deletion_tol && (!best || res.value > best->value)) {
                    best = std::move(res);
                    best_kept = kept;
                }
            }
            if (!best) return;
            keep(best_kept, *best);
        }
    }

    /// Step 2: one y-compression, then a warm-started re-optimization.
    bool compress_once() {
        const auto order = tolerant_order(out_.y, options_.tie_eps);
        for (std::size_t a = 0; a < order.size(); ++a) {
            for (std::size_t b = a + 1; b < order.size(); ++b) {
                const Vertex i = order[a], j = order[b];
                if (link_diff(out_.graph, j, i).empty()) continue;
                CompressionStep step;
                step.kind = CompressionStep::Kind::compress;
                step.i = i;
                step.j = j;
                step.before = s_value(out_.graph, order);
                out_.graph = compress(out_.graph, i, j);
                step.after = s_value(out_.graph, order);
                out_.trace.steps.push_back(step);

                CompressionStep recompute;
                recompute.kind = CompressionStep::Kind::recompute_optimum;
                recompute.before = std::llround(out_.value * 1e12);
                reoptimize(out_.y);
                recompute.after = std::llround(out_.value * 1e12);
                out_.trace.steps.push_back(recompute);
                return true;
            }
        }
        return false;
    }

    void check_family() {
        if (options_.family && !options_.family(out_.graph))
            out_.family_violations.push_back(out_.trace.steps.size());
    }

    const DenseCompressedOptions& options_;
    DenseCompressed out_;
};

}  // namespace

DenseCompressed dense_compressed_subgraph(const Hypergraph& g, const DenseCompressedOptions& options) {
    return DenseCompressedRun(g, options).run();
}

bool is_alpha_dense(const Hypergraph& g, double alpha) {
    if (g.order() == 0) return true;
    const auto deg = g.degrees();
    const double need = alpha * static_cast<double>(binomial(g.order() - 1, g.uniformity() - 1));
    return *std::min_element(deg.begin(), deg.end()) >= need;
}

namespace {

/// Link of v as a sorted list of (r-1)-sets.
std::vector<VertexSet> link_sets(const Hypergraph& g, Vertex v) {
    std::vector<VertexSet> out;
    for (VertexSet e : g.edges())
        if (contains(e, v)) out.push_back(e & ~vertex_bit(v));
    return out;
}

std::vector<VertexSet> classes_within(const Hypergraph& g, VertexSet alive) {
    std::vector<std::vector<VertexSet>> links(g.order());
    for (Vertex v : members(alive)) links[v - 1] = link_sets(g, v);
    std::vector<VertexSet> classes;
    VertexSet assigned = 0;
    for (Vertex v : members(alive)) {
        if (contains(assigned, v)) continue;
        VertexSet cls = vertex_bit(v);
        for (Vertex w : members(alive & ~assigned))
            if (w > v && links[w - 1] == links[v - 1]) cls |= vertex_bit(w);
        assigned |= cls;
        classes.push_back(cls);
    }
    return classes;
}

VertexSet class_of(const std::vector<VertexSet>& classes, Vertex v) {
    for (VertexSet c : classes)
        if (contains(c, v)) return c;
    return 0;
}

int min_degree(const Hypergraph& g, VertexSet alive) {
    if (alive == 0) return 0;
    const auto deg = g.degrees();
    int m = std::numeric_limits<int>::max();
    for (Vertex v : members(alive)) m = std::min(m, deg[v - 1]);
    return m;
}

bool alpha_dense_within(const Hypergraph& g, VertexSet alive, double alpha) {
    const int n = set_size(alive);
    if (n == 0) return true;
    const double need = alpha * static_cast<double>(binomial(n - 1, g.uniformity() - 1));
    return min_degree(g, alive) >= need;
}

Hypergraph without_vertex(const Hypergraph& g, Vertex z) {
    std::vector<VertexSet> edges;
    for (VertexSet e : g.edges())
        if (!contains(e, z)) edges.push_back(e);
    return Hypergraph::from_sets(g.uniformity(), g.order(), std::move(edges));
}

/// Every vertex of `moved` takes the link of u (computed before any change).
Hypergraph symmetrize_class(const Hypergraph& g, Vertex u, VertexSet moved) {
    const auto link_u = link_sets(g, u);
    std::vector<VertexSet> edges;
    for (VertexSet e : g.edges())
        if ((e & moved) == 0) edges.push_back(e);
    for (Vertex w : members(moved))
        for (VertexSet a : link_u) edges.push_back(a | vertex_bit(w));
    return Hypergraph::from_sets(g.uniformity(), g.order(), std::move(edges));
}

}  // namespace

std::vector<VertexSet> equivalence_classes(const Hypergraph& g) { return classes_within(g, g.vertex_set()); }

Symmetrized symmetrize_and_clean(const Hypergraph& g, const SymmetrizeOptions& options) {
    if (!(options.alpha > 0.0) || options.alpha > 1.0)
        throw HypergraphError("alpha must satisfy 0 < alpha <= 1");
    Symmetrized out;
    Hypergraph h = g;
    VertexSet alive = g.vertex_set();
    for (;;) {
        if (alive == 0 || h.empty()) break;
        if (out.iterations >= options.max_iterations) {
            out.converged = false;
            break;
        }
        const auto classes = classes_within(h, alive);
        const auto cover = pair_coverage(h);
        const auto deg = h.degrees();
        auto partners = [&](Vertex a) { return alive & ~cover[a - 1] & ~class_of(classes, a); };
        auto heavier = [&](Vertex a, Vertex b) { return deg[a - 1] != deg[b - 1] ? deg[a - 1] > deg[b - 1] : a < b; };
        Vertex u = 0;
        for (Vertex a : members(alive))
            if (partners(a) != 0 && (u == 0 || heavier(a, u))) u = a;
        if (u == 0) break;
        Vertex v = 0;
        for (Vertex b : members(partners(u)))
            if (deg[b - 1] <= deg[u - 1] && (v == 0 || heavier(b, v))) v = b;

        ++out.iterations;
        const VertexSet moved = class_of(classes, v);
        const VertexSet u_class = class_of(classes, u);
        SymmetrizationStep sym;
        sym.kind = SymmetrizationStep::Kind::symmetrize;
        sym.u = u;
        sym.v = v;
        sym.moved = moved;
        sym.edges_before = h.size();
        h = symmetrize_class(h, u, moved);
        sym.edges_after = h.size();
        sym.min_degree_after = min_degree(h, alive);
        out.trace.steps.push_back(sym);

        // Cleaning.
        VertexSet z_set = 0;
        while (alive != 0 && (h.empty() || !alpha_dense_within(h, alive, options.alpha))) {
            const auto d = h.degrees();
            Vertex victim = 0;
            if (h.empty()) {
                victim = min_vertex(alive);
            } else {
                Vertex z = 0;
                for (Vertex a : members(alive))
                    if (z == 0 || d[a - 1] < d[z - 1]) z = a;
                victim = z;
                if (contains(u_class, z)) {
                    if (contains(alive, v))
                        victim = v;
                    else if (moved & alive)
                        victim = min_vertex(moved & alive);
                }
            }
            SymmetrizationStep clean;
            clean.kind = SymmetrizationStep::Kind::clean;
            clean.removed = victim;
            clean.edges_before = h.size();
            h = without_vertex(h, victim);
            alive &= ~vertex_bit(victim);
            z_set |= vertex_bit(victim);
            clean.edges_after = h.size();
            clean.min_degree_after = min_degree(h, alive);
            out.trace.steps.push_back(clean);
        }
        out.removed.push_back(z_set);
    }
    auto sub = induced(h, alive);
    out.graph = std::move(sub.graph);
    out.original = std::move(sub.original);
    return out;
}

Hypergraph replay(const Hypergraph& g, const SymmetrizationTrace& trace) {
    Hypergraph h = g;
    VertexSet alive = g.vertex_set();
    for (const auto& step : trace.steps) {
        if (step.kind == SymmetrizationStep::Kind::symmetrize) {
            h = symmetrize_class(h, step.u, step.moved);
        } else {
            h = without_vertex(h, step.removed);
            alive &= ~vertex_bit(step.removed);
        }
    }
    return induced(h, alive).graph;
}

bool is_blowup_of_representatives(const Hypergraph& g) {
    const auto classes = equivalence_classes(g);
    std::vector<Vertex> rep(g.order() + 1, 0);
    VertexSet reps = 0;
    for (VertexSet c : classes) {
        reps |= vertex_bit(min_vertex(c));
        for (Vertex v : members(c)) rep[v] = min_vertex(c);
    }
    for (VertexSet e : g.edges()) {
        VertexSet image = 0;
        for (Vertex v : members(e)) image |= vertex_bit(rep[v]);
        if (set_size(image) != g.uniformity() || !g.has_edge(image)) return false;
    }
    long long expected = 0;
    for (VertexSet f : g.edges()) {
        if ((f & ~reps) != 0) continue;
        long long product = 1;
        for (Vertex v : members(f)) product *= set_size(class_of(classes, v));
        expected += product;
    }
    return expected == static_cast<long long>(g.size());
}

}  // namespace lagrangia
