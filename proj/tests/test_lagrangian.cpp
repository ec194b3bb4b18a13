#include "doctest.h"

#include <cmath>
#include <functional>

#include "lagrangia/constructions.hpp"
#include "lagrangia/detection.hpp"
#include "lagrangia/lagrangian.hpp"
#include "support.hpp"

using namespace lagrangia;
using testing::Gen;

namespace {

Hypergraph hg(int r, int n, std::vector<std::vector<Vertex>> edges) { return Hypergraph::build(r, n, edges); }

std::vector<double> uniform(int n) { return std::vector<double>(n, 1.0 / n); }

/// Best value over the grid {k/steps} of the simplex (n <= 5).
double grid_max(const Hypergraph& g, int steps) {
    const int n = g.order();
    std::vector<int> k(n, 0);
    double best = 0.0;
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            k[pos] = left;
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i) x[i] = static_cast<double>(k[i]) / steps;
            best = std::max(best, evaluate(g, x));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            k[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, steps);
    return best;
}

/// x is the projection of v onto {sum 1, 0 <= x <= cap} iff x = clamp(v - tau, 0, cap)
/// for one tau; recover tau from a free coordinate, or bracket it.
bool is_threshold_projection(std::span<const double> v, std::span<const double> x, double cap) {
    double lo = -1e300, hi = 1e300;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (x[i] <= 1e-12) lo = std::max(lo, v[i] - 1e-9);                    // v_i - tau <= 0
        else if (x[i] >= cap - 1e-12) hi = std::min(hi, v[i] - cap + 1e-9);  // v_i - tau >= cap
        else {
            lo = std::max(lo, v[i] - x[i] - 1e-9);
            hi = std::min(hi, v[i] - x[i] + 1e-9);
        }
    }
    return lo <= hi;
}

}  // namespace

TEST_CASE("evaluate examples") {
    const auto k3 = complete_graph(2, 3);
    CHECK(evaluate(k3, uniform(3)) == doctest::Approx(1.0 / 3));
    CHECK(evaluate(complete_graph(3, 5), uniform(5)) == doctest::Approx(0.08));
    const std::vector<Rational> third(3, Rational(1, 3));
    CHECK(evaluate(k3, std::span<const Rational>(third)) == Rational(1, 3));
    const std::vector<Rational> fifth(5, Rational(1, 5));
    CHECK(evaluate(complete_graph(3, 5), std::span<const Rational>(fifth)) == Rational(2, 25));
    CHECK_THROWS_AS(evaluate(k3, uniform(4)), LagrangianError);

    Gen gen(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int r = gen.uniform(2, 4), n = gen.uniform(r, 8);
        const auto g = gen.graph(r, n, gen.unit());
        const std::vector<Rational> u(n, Rational(1, n));
        Rational expected(static_cast<long>(g.size()));
        for (int k = 0; k < r; ++k) expected /= n;
        CHECK(evaluate(g, std::span<const Rational>(u)) == expected);
    }
}

TEST_CASE("gradient examples") {
    const auto grad = gradient(complete_graph(2, 3), uniform(3));
    for (double d : grad) CHECK(d == doctest::Approx(2.0 / 3));
    const std::vector<Rational> x = {Rational(1, 2), Rational(1, 4), Rational(1, 4)};
    const auto exact = gradient(hg(3, 3, {{1, 2, 3}}), std::span<const Rational>(x));
    CHECK(exact == std::vector<Rational>{Rational(1, 16), Rational(1, 8), Rational(1, 8)});
}

TEST_CASE("gradient: central differences and the Euler identity") {
    Gen gen(32);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = gen.uniform(2, 4), n = gen.uniform(r, 8);
        const auto g = gen.graph(r, n, gen.unit());
        auto x = gen.simplex_point(n);
        const auto grad = gradient(g, x);
        const double h = 1e-5;
        for (int i = 0; i < n; ++i) {
            auto up = x, down = x;
            up[i] += h;
            down[i] -= h;
            CHECK(std::abs(grad[i] - (evaluate(g, up) - evaluate(g, down)) / (2 * h)) <= 1e-6);
        }
        const auto q = gen.rational_point(n);
        const auto gq = gradient(g, std::span<const Rational>(q));
        Rational euler = 0;
        for (int i = 0; i < n; ++i) euler += q[i] * gq[i];
        CHECK(euler == Rational(r) * evaluate(g, std::span<const Rational>(q)));
    }
}

TEST_CASE("weight vectors") {
    CHECK_NOTHROW(WeightVector({0.5, 0.5}));
    CHECK_THROWS_AS(WeightVector({0.5, 0.6}), LagrangianError);
    CHECK_THROWS_AS(WeightVector({1.5, -0.5}), LagrangianError);
    CHECK_THROWS_AS(WeightVector({0.7, 0.3}, 0.5), LagrangianError);
    const std::vector<Rational> q = {Rational(1, 3), Rational(2, 3)};
    CHECK(is_feasible(std::span<const Rational>(q)));
    CHECK_FALSE(is_feasible(std::span<const Rational>(q), Rational(1, 2)));
}

TEST_CASE("simplex projections") {
    const auto a = project_simplex(std::vector<double>{2, 0, 0});
    CHECK(a[0] == doctest::Approx(1.0));
    CHECK(a[1] == 0.0);
    const auto b = project_simplex(std::vector<double>{0.5, 0.5, 0.5});
    for (double v : b.values()) CHECK(v == doctest::Approx(1.0 / 3));
    const auto c = project_simplex_box(std::vector<double>{1, 0, 0, 0}, 0.5);
    CHECK(c[0] == doctest::Approx(0.5));
    for (int i = 1; i < 4; ++i) CHECK(c[i] == doctest::Approx(1.0 / 6));
    CHECK_THROWS_AS(project_simplex_box(std::vector<double>{1, 0, 0}, 0.3), InfeasibleBound);
    CHECK_THROWS_AS(project_simplex(std::vector<double>{}), InfeasibleBound);

    Gen gen(33);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = gen.uniform(1, 12);
        std::vector<double> v(n);
        const double scale = trial % 3 == 0 ? 1e5 : 2.0;
        for (double& x : v) x = (gen.unit() - 0.3) * scale;
        const auto p = project_simplex(v);
        CHECK(is_feasible(p.values()));
        CHECK(is_threshold_projection(v, p.values(), 1e300));
        const double cap = std::max(1.0 / n, gen.unit());
        const auto box = project_simplex_box(v, cap);
        CHECK(is_feasible(box.values(), cap));
        CHECK(is_threshold_projection(v, box.values(), cap));
    }
}

TEST_CASE("maximize examples") {
    const auto k5 = maximize(complete_graph(3, 5));
    CHECK(std::abs(k5.value - 0.08) <= 1e-8);
    for (double v : k5.witness.values()) CHECK(v == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(k5.kkt_residual <= 1e-6);
    CHECK(k5.restarts == 50);
    CHECK_FALSE(k5.bounded_by);

    for (int r = 2; r <= 4; ++r)
        for (int m = r; m <= 8; ++m) {
            const double exact = static_cast<double>(binomial(m, r)) / std::pow(m, r);
            CHECK(std::abs(maximize(complete_graph(r, m)).value - exact) <= 1e-8);
        }

    const auto empty = maximize(Hypergraph(3, 4));
    CHECK(empty.value == 0.0);
    CHECK(empty.witness.size() == 4);
    CHECK(maximize(Hypergraph(3, 0)).value == 0.0);
}

TEST_CASE("maximize reaches the grid optimum on small graphs") {
    Gen gen(34);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = gen.uniform(2, 3), n = gen.uniform(r, 5);
        const auto g = gen.graph(r, n, 0.3 + 0.7 * gen.unit());
        const double grid = grid_max(g, 30);
        const auto res = maximize(g);
        CHECK(res.value >= grid - 1e-12);
        CHECK(res.value <= grid + 0.05);
        CHECK(res.value == evaluate(g, res.witness.values()));
    }
}

TEST_CASE("maximize: properties") {
    Gen gen(35);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = gen.uniform(2, 3), n = gen.uniform(r + 1, 8);
        const auto g = gen.graph(r, n, 0.3 + 0.7 * gen.unit());
        const auto res = maximize(g);
        double uniform_value = static_cast<double>(g.size());
        for (int k = 0; k < r; ++k) uniform_value /= n;
        CHECK(res.value >= uniform_value - 1e-12);
        CHECK(res.kkt_residual <= 1e-6);
        CHECK(res.kkt_residual == doctest::Approx(kkt_residual(g, res.witness.values())));

        // Fact: deleting edges cannot raise lambda.
        std::vector<VertexSet> kept;
        for (VertexSet e : g.edges())
            if (gen.coin(0.6)) kept.push_back(e);
        const auto h = Hypergraph::from_sets(r, n, kept);
        CHECK(maximize(h).value <= res.value + 1e-8);

        CHECK(std::abs(maximize_bounded(g, 1.0).value - res.value) <= 1e-8);
        double previous = 0.0;
        for (int k = 1; k <= 4; ++k) {
            const double b = std::max(1.0 / n, k / 4.0);
            const double value = maximize_bounded(g, b).value;
            CHECK(value >= previous - 1e-9);
            previous = value;
        }
    }
}

TEST_CASE("maximize is deterministic across thread counts") {
    Gen gen(36);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = gen.graph(3, 7, 0.5);
        OptimizerConfig one, four;
        one.seed = four.seed = 17;
        four.threads = 4;
        const auto a = maximize(g, one), b = maximize(g, four);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(maximize(g, one).witness == a.witness);
    }
    OptimizerConfig bad;
    bad.restarts = -1;
    CHECK_THROWS_AS(maximize(complete_graph(3, 4), bad), LagrangianError);
}

TEST_CASE("bounded maximization") {
    CHECK(std::abs(maximize_bounded(complete_graph(3, 5), 1.0).value - 0.08) <= 1e-8);
    const auto infeasible = maximize_bounded(complete_graph(3, 4), 0.2);
    CHECK(infeasible.value == 0.0);
    CHECK(infeasible.infeasible);
    CHECK_THROWS_AS(maximize_bounded(complete_graph(3, 4), 0.0), LagrangianError);
    CHECK_THROWS_AS(maximize_bounded(complete_graph(3, 4), 1.5), LagrangianError);

    std::vector<VertexSet> star;
    for (VertexSet pair : subsets_of_size(full_set(12) & ~vertex_bit(1), 2)) star.push_back(pair | vertex_bit(1));
    const auto s = maximize_bounded(Hypergraph::from_sets(3, 12, star), 1.0 / 7);
    CHECK(s.value <= 18.0 / 343 + 1e-8);
    CHECK(*s.bounded_by == doctest::Approx(1.0 / 7));
    for (double v : s.witness.values()) CHECK(v <= 1.0 / 7 + 1e-12);
    CHECK(s.kkt_residual <= 1e-6);
}

TEST_CASE("Motzkin-Straus") {
    CHECK(motzkin_straus(complete_graph(2, 4)) == Rational(3, 8));
    CHECK(motzkin_straus(hg(2, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})) == Rational(1, 4));
    CHECK(motzkin_straus(Hypergraph(2, 4)) == 0);
    CHECK_THROWS_AS(motzkin_straus(complete_graph(3, 4)), LagrangianError);

    Gen gen(37);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = gen.graph(2, gen.uniform(2, 9), gen.unit());
        const int omega = testing::naive_clique_number(g);
        const Rational expected = g.empty() ? Rational(0) : Rational(1, 2) * (1 - Rational(1, omega));
        CHECK(motzkin_straus(g) == expected);
        CHECK(std::abs(maximize(g).value - to_double(expected)) <= 1e-8);
    }
}

TEST_CASE("KKT residual") {
    CHECK(kkt_residual(complete_graph(3, 5), uniform(5)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(kkt_residual(hg(3, 3, {{1, 2, 3}}), std::vector<double>{1, 0, 0}) == 0.0);
    Gen gen(38);
    int positive = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = gen.graph(3, 6, 0.6);
        if (g.empty()) continue;
        positive += kkt_residual(g, gen.simplex_point(6)) > 1e-6;
    }
    CHECK(positive >= 15);
}

TEST_CASE("symmetrizing twins") {
    const auto k5 = complete_graph(3, 5);
    const std::vector<double> x = {0.4, 0.15, 0.15, 0.15, 0.15};
    const auto y = symmetrize_uncovered(k5, x);
    for (double v : y.values()) CHECK(v == doctest::Approx(0.2));
    CHECK(evaluate(k5, y.values()) > evaluate(k5, x));

    // 1 and 3 are twins, 2 has none and keeps its weight.
    const auto path = hg(2, 3, {{1, 2}, {2, 3}});
    const std::vector<double> p = {0.5, 0.3, 0.2};
    CHECK(symmetrize_uncovered(path, p).values()[1] == doctest::Approx(0.3));

    Gen gen(39);
    const auto m2 = matching_graph(3, 2);
    for (int trial = 0; trial < 30; ++trial) {
        const auto z = gen.simplex_point(6);
        const auto s = symmetrize_uncovered(m2, z);
        CHECK(s[0] == doctest::Approx(s[1]));
        CHECK(s[3] == doctest::Approx(s[5]));
        CHECK(evaluate(m2, s.values()) >= evaluate(m2, z) - 1e-15);
    }
}
