#include "doctest.h"

#include <cmath>

#include "lagrangia/algorithms.hpp"
#include "lagrangia/constructions.hpp"
#include "lagrangia/detection.hpp"
#include "lagrangia/lagrangian.hpp"
#include "support.hpp"

using namespace lagrangia;
using testing::Gen;

namespace {

Hypergraph hg(int r, int n, std::vector<std::vector<Vertex>> edges) { return Hypergraph::build(r, n, edges); }

/// No pair i ahead of j with x_i > x_j and a nonempty L(j \ i).
template <class Scalar>
bool is_weight_compressed(const Hypergraph& g, const std::vector<Scalar>& x) {
    for (Vertex i = 1; i <= g.order(); ++i)
        for (Vertex j = 1; j <= g.order(); ++j)
            if (x[i - 1] > x[j - 1] && !link_diff(g, j, i).empty()) return false;
    return true;
}

double min_degree_ratio(const Hypergraph& g) {
    if (g.order() == 0) return 0.0;
    const auto d = g.degrees();
    return *std::min_element(d.begin(), d.end()) / static_cast<double>(binomial(g.order() - 1, g.uniformity() - 1));
}

}  // namespace

TEST_CASE("weight order keeps labels on ties") {
    const std::vector<double> x = {0.1, 0.3, 0.3, 0.2, 0.1};
    CHECK(weight_order(std::span<const double>(x)) == std::vector<Vertex>{2, 3, 4, 1, 5});
}

TEST_CASE("left compression examples") {
    const auto g = hg(3, 4, {{2, 3, 4}});
    const std::vector<double> x = {0.4, 0.3, 0.2, 0.1};
    const auto out = left_compress_to_fixpoint(g, x);
    CHECK(out.graph == hg(3, 4, {{1, 2, 3}}));
    // Smallest pair first: 234 -> 134 -> 124 -> 123, s dropping by one each time.
    REQUIRE(out.trace.steps.size() == 3);
    const std::pair<Vertex, Vertex> pairs[] = {{1, 2}, {2, 3}, {3, 4}};
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(out.trace.steps[k].i == pairs[k].first);
        CHECK(out.trace.steps[k].j == pairs[k].second);
        CHECK(out.trace.steps[k].before == 9 - static_cast<long long>(k));
        CHECK(out.trace.steps[k].after == 8 - static_cast<long long>(k));
    }

    const auto fixed = left_compress_to_fixpoint(hg(3, 4, {{1, 2, 3}}), x);
    CHECK(fixed.graph == hg(3, 4, {{1, 2, 3}}));
    CHECK(fixed.trace.steps.empty());

    const auto m2 = matching_graph(3, 2);
    const auto same = left_compress_to_fixpoint(m2, std::vector<double>(6, 1.0 / 6));
    CHECK(same.graph == m2);
    CHECK(same.trace.steps.empty());
    CHECK_THROWS_AS(left_compress_to_fixpoint(m2, std::vector<double>(5, 0.2)), LagrangianError);
}

TEST_CASE("left compression: exact properties") {
    Gen gen(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = gen.uniform(2, 3), n = gen.uniform(r + 1, 8);
        const auto g = gen.graph(r, n, gen.unit());
        const auto x = gen.rational_point(n);
        const auto out = left_compress_to_fixpoint(g, std::span<const Rational>(x));
        CHECK(out.graph.size() == g.size());
        CHECK(evaluate(out.graph, std::span<const Rational>(x)) >= evaluate(g, std::span<const Rational>(x)));
        CHECK(is_weight_compressed(out.graph, x));
        CHECK(replay(g, out.trace) == out.graph);
        for (const auto& step : out.trace.steps) CHECK(step.after < step.before);
        const int nu = testing::naive_matching_number(g.size() <= 16 ? g : Hypergraph(r, n));
        if (g.size() <= 16) CHECK(testing::naive_matching_number(out.graph) <= nu);
    }
}

TEST_CASE("dense compressed subgraph examples") {
    const auto k5 = dense_compressed_subgraph(complete_graph(3, 5));
    CHECK(k5.graph == complete_graph(3, 5));
    for (double y : k5.y) CHECK(y == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(k5.converged);

    const auto padded = dense_compressed_subgraph(hg(3, 6, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
                                                             {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}}));
    CHECK(padded.graph == complete_graph(3, 5));
    CHECK(padded.original == std::vector<Vertex>{1, 2, 3, 4, 5});

    const auto single = dense_compressed_subgraph(hg(3, 4, {{2, 3, 4}}));
    CHECK(single.graph == complete_graph(3, 3));
    CHECK(single.original == std::vector<Vertex>{2, 3, 4});
    CHECK(single.value == doctest::Approx(1.0 / 27));
    for (double y : single.y) CHECK(y == doctest::Approx(1.0 / 3).epsilon(1e-6));

    const auto none = dense_compressed_subgraph(Hypergraph(3, 4));
    CHECK(none.graph.order() == 0);
}

TEST_CASE("dense compressed subgraph: contracts") {
    Gen gen(42);
    const auto oracle = lagrangian_oracle();
    for (int trial = 0; trial < 25; ++trial) {
        const int r = gen.uniform(2, 3), n = gen.uniform(r + 1, 7);
        const auto g = gen.graph(r, n, 0.3 + 0.6 * gen.unit());
        const int t = 2;
        const bool free_before = !has_matching(g, t) && !has_clique(g, t * r - 1);
        DenseCompressedOptions options;
        options.family = [&](const Hypergraph& h) { return !has_matching(h, t) && !has_clique(h, t * r - 1); };
        const auto out = dense_compressed_subgraph(g, options);
        CHECK(out.converged);
        // Compressing at an optimum can raise lambda, never lower it.
        CHECK(out.value >= maximize(g).value - 1e-7);
        CHECK(out.input_value == doctest::Approx(maximize(g).value).epsilon(1e-9));
        CHECK(std::abs(out.value - evaluate(out.graph, out.y)) <= 1e-12);
        CHECK(is_dense(out.graph, oracle).status != DensityStatus::not_dense);
        if (!out.graph.empty()) CHECK(covers_pairs(out.graph));
        CHECK(replay(g, out.trace) == out.graph);
        if (free_before) CHECK(out.family_violations.empty());
        for (const auto& step : out.trace.steps) {
            if (step.kind == CompressionStep::Kind::dense_subgraph) CHECK(step.after < step.before);
            if (step.kind == CompressionStep::Kind::compress) CHECK(step.after < step.before);
        }
    }
}

TEST_CASE("dense compressed subgraph can gain") {
    // lambda = 0.07097...; a compression at the optimum of the dense part
    // leads to a graph with lambda = 0.07557...
    const auto g = hg(3, 7, {{1, 2, 3}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6}, {1, 3, 7}, {1, 4, 5}, {1, 4, 7},
                             {1, 5, 6}, {1, 6, 7}, {2, 3, 4}, {2, 4, 6}, {2, 5, 6}, {2, 5, 7}, {3, 4, 5},
                             {3, 4, 6}, {3, 4, 7}, {3, 5, 7}, {4, 5, 6}, {4, 6, 7}, {5, 6, 7}});
    const auto out = dense_compressed_subgraph(g);
    CHECK(out.input_value == doctest::Approx(0.0709712171).epsilon(1e-8));
    CHECK(out.value > out.input_value + 1e-3);
    CHECK(std::abs(out.value - maximize(out.graph).value) <= 1e-9);
    CHECK(replay(g, out.trace) == out.graph);
}

TEST_CASE("alpha density and equivalence classes") {
    CHECK(is_alpha_dense(complete_graph(3, 5), 1.0));
    CHECK_FALSE(is_alpha_dense(linear_star(3, 2), 0.5));
    const std::vector<int> parts = {2, 2, 2, 2};
    const auto b = blowup(complete_graph(2, 4), parts);
    const auto classes = equivalence_classes(b);
    CHECK(classes.size() == 4);
    CHECK(classes[0] == (vertex_bit(1) | vertex_bit(2)));
    CHECK(is_blowup_of_representatives(b));
    CHECK(is_blowup_of_representatives(complete_graph(3, 5)));
    // Adjacent vertices are never twins, so every class of M_2^3 is a singleton.
    CHECK(is_blowup_of_representatives(matching_graph(3, 2)));
    CHECK(is_blowup_of_representatives(hg(2, 4, {{1, 2}, {1, 3}, {2, 4}})));
}

TEST_CASE("blowup recognition agrees with rebuilding") {
    Gen gen(43);
    for (int trial = 0; trial < 150; ++trial) {
        const int r = gen.uniform(2, 3);
        const auto g = gen.graph(r, gen.uniform(r, 7), gen.unit());
        // Oracle: collapse classes to representatives and blow back up.
        const auto classes = equivalence_classes(g);
        VertexSet reps = 0;
        std::vector<int> sizes;
        for (VertexSet c : classes) {
            reps |= vertex_bit(min_vertex(c));
        }
        const auto core = induced(g, reps);
        for (Vertex v : core.original)
            for (VertexSet c : classes)
                if (contains(c, v)) sizes.push_back(set_size(c));
        bool transversal_core = true;
        for (VertexSet e : g.edges())
            for (VertexSet c : classes)
                if (set_size(e & c) > 1) transversal_core = false;
        const bool expected = transversal_core && testing::naive_isomorphic(blowup(core.graph, sizes), g);
        CHECK(is_blowup_of_representatives(g) == expected);
    }
}

TEST_CASE("symmetrization examples") {
    const auto k5 = symmetrize_and_clean(complete_graph(3, 5), {0.9});
    CHECK(k5.graph == complete_graph(3, 5));
    CHECK(k5.trace.steps.empty());
    CHECK(k5.iterations == 0);

    const auto two = hg(2, 4, {{1, 2}, {3, 4}});
    const auto out = symmetrize_and_clean(two, {0.1});
    REQUIRE_FALSE(out.trace.steps.empty());
    const auto& first = out.trace.steps.front();
    CHECK(first.kind == SymmetrizationStep::Kind::symmetrize);
    CHECK(first.u == 1);
    CHECK(first.v == 3);
    CHECK(first.edges_after >= first.edges_before);
    CHECK(replay(two, out.trace) == out.graph);

    const std::vector<int> parts = {2, 2, 2, 2};
    const auto planted = blowup(complete_graph(2, 4), parts);
    const auto p = symmetrize_and_clean(planted, {0.4});
    CHECK(equivalence_classes(p.graph).size() <= 4);
    CHECK(p.graph == planted);
    VertexSet reps = 0;
    for (VertexSet c : equivalence_classes(p.graph)) reps |= vertex_bit(min_vertex(c));
    CHECK(induced(p.graph, reps).graph == complete_graph(2, 4));

    CHECK_THROWS_AS(symmetrize_and_clean(two, {0.0}), HypergraphError);
    CHECK_THROWS_AS(symmetrize_and_clean(two, {1.5}), HypergraphError);
}

TEST_CASE("symmetrization: contracts") {
    Gen gen(44);
    int nonempty = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const int r = gen.uniform(2, 3), n = gen.uniform(r + 1, 8);
        const auto g = gen.graph(r, n, 0.4 + 0.5 * gen.unit());
        if (g.empty()) continue;
        const double ratio = min_degree_ratio(g);
        const double alpha = ratio > 0 ? std::min(1.0, ratio * (0.5 + 0.5 * gen.unit())) : 0.3;
        const auto out = symmetrize_and_clean(g, {alpha});
        CHECK(out.converged);
        for (const auto& step : out.trace.steps)
            if (step.kind == SymmetrizationStep::Kind::symmetrize) CHECK(step.edges_after >= step.edges_before);
        CHECK(replay(g, out.trace) == out.graph);
        CHECK(out.removed.size() == static_cast<std::size_t>(out.iterations));
        CHECK(out.graph.order() == static_cast<int>(out.original.size()));
        if (out.graph.empty()) continue;
        ++nonempty;
        if (ratio >= alpha) CHECK(is_alpha_dense(out.graph, alpha));
        CHECK(is_blowup_of_representatives(out.graph));
        VertexSet reps = 0;
        for (VertexSet c : equivalence_classes(out.graph)) reps |= vertex_bit(min_vertex(c));
        CHECK(covers_pairs(induced(out.graph, reps).graph));
    }
    CHECK(nonempty > 20);
}
