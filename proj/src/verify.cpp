#include "lagrangia/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "lagrangia/algorithms.hpp"
#include "lagrangia/canonical.hpp"
#include "lagrangia/constructions.hpp"
#include "lagrangia/detection.hpp"
#include "lagrangia/enumerate.hpp"
#include "lagrangia/families.hpp"

namespace lagrangia {

const char* version() { return LAGRANGIA_VERSION; }

bool Report::passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

Json Report::to_json() const {
    std::vector<const Assertion*> sorted;
    for (const auto& a : assertions) sorted.push_back(&a);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Assertion* a, const Assertion* b) { return a->id < b->id; });
    Json list = Json::array();
    for (const Assertion* a : sorted) {
        Json j;
        j["id"] = a->id;
        j["claim"] = a->claim;
        j["passed"] = a->passed;
        j["details"] = a->details;
        j["counterexample"] = a->counterexample;
        list.push_back(std::move(j));
    }
    Json j;
    j["command"] = command;
    j["suite"] = suite;
    j["inputs"] = inputs;
    j["seed"] = seed;
    j["version"] = version;
    j["assertions"] = std::move(list);
    j["passed"] = passed();
    if (wall_seconds) j["wall_seconds"] = *wall_seconds;
    return j;
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool coin(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

Hypergraph random_graph(Rng& rng, int r, int n, double p) {
    std::vector<VertexSet> edges;
    for (VertexSet cell : subsets_of_size(full_set(n), r))
        if (rng.coin(p)) edges.push_back(cell);
    return Hypergraph::from_sets(r, n, std::move(edges));
}

/// Random maximal-ish M_t^r-free graph: cells in random order, kept while free.
Hypergraph random_matching_free(Rng& rng, int r, int n, int t, double p) {
    auto cells = subsets_of_size(full_set(n), r);
    for (std::size_t k = cells.size(); k > 1; --k) std::swap(cells[k - 1], cells[rng.next() % k]);
    std::vector<VertexSet> edges;
    for (VertexSet cell : cells) {
        if (!rng.coin(p)) continue;
        edges.push_back(cell);
        if (has_matching(Hypergraph::from_sets(r, n, edges), t)) edges.pop_back();
    }
    return Hypergraph::from_sets(r, n, std::move(edges));
}

std::vector<Rational> random_rational_weights(Rng& rng, int n) {
    std::vector<long> w(n);
    long total = 0;
    while (total == 0) {
        total = 0;
        for (long& v : w) total += (v = rng.uniform(0, 20));
    }
    std::vector<Rational> x;
    for (long v : w) x.push_back(rational(v, total));
    return x;
}

bool edges_within(const Hypergraph& g, const Hypergraph& h) {
    return std::all_of(g.edges().begin(), g.edges().end(), [&](VertexSet e) { return h.has_edge(e); });
}

struct Suite {
    const VerifyParams& params;
    Report& report;
    OptimizerConfig config;

    Suite(const VerifyParams& p, Report& r) : params(p), report(r) {
        config.seed = p.seed;
        config.threads = p.threads;
    }

    /// A deque, so references handed out stay valid.
    std::deque<Assertion> pending;

    Assertion& add(std::string id, std::string claim) {
        pending.push_back(Assertion{std::move(id), std::move(claim)});
        return pending.back();
    }

    void fail(Assertion& a, Json counterexample) {
        if (a.passed) a.counterexample = std::move(counterexample);
        a.passed = false;
    }

    int n_or(int fallback) const { return params.n.value_or(fallback); }
    int t_or(int fallback) const { return params.t.value_or(fallback); }
    int samples_or(int fallback) const { return params.samples.value_or(fallback); }

    double lambda(const Hypergraph& g) const { return maximize(g, config).value; }
    double lambda_b(const Hypergraph& g, double b) const { return maximize_bounded(g, b, config).value; }
};

void stability_hk(Suite& s) {
    const int n = s.n_or(6);
    s.report.inputs["n"] = n;
    const Hypergraph k5 = complete_graph(3, 5);
    const Rational target = lambda_complete(3, 5);
    const double target_d = to_double(target);

    auto& closed = s.add("closed-form-k5", "optimizer reproduces lambda(K_5^3) = 2/25 within 1e-8");
    const double lk5 = s.lambda(k5);
    closed.details["optimizer"] = lk5;
    closed.details["exact"] = target.get_str();
    if (std::abs(lk5 - target_d) > 1e-8) s.fail(closed, Json{{"value", lk5}});

    EnumerateOptions options;
    options.force_scale = s.params.force_scale;
    options.threads = s.params.threads;
    const auto found = max_lagrangian_over_free(3, n, matching_graph(3, 2), {}, s.config, options);
    const std::string k5_key = canonical(k5);

    auto& max = s.add("maximum", "max lambda over M_2^3-free 3-graphs without isolated vertices is 2/25");
    max.details["classes"] = found.classes.size();
    max.details["maximum"] = found.value;
    if (n >= 5 && std::abs(found.value - target_d) > 1e-8) s.fail(max, Json{{"maximum", found.value}});

    auto& unique = s.add("unique-maximizer", "the maximum is attained only by K_5^3");
    unique.details["witness"] = to_json(found.witness);
    auto& gap = s.add("gap", "every other class has lambda <= 2/25 - 1e-3");
    double second = 0.0;
    Hypergraph runner_up;
    for (const auto& [g, value] : found.classes) {
        if (g.order() == 5 && canonical(g) == k5_key) continue;
        if (value > second) {
            second = value;
            runner_up = g;
        }
        if (value > target_d - 1e-3) s.fail(gap, Json{{"graph", to_json(g)}, {"lambda", value}});
        if (value >= target_d - 1e-8) s.fail(unique, Json{{"graph", to_json(g)}, {"lambda", value}});
    }
    gap.details["runner_up"] = to_json(runner_up);
    gap.details["runner_up_lambda"] = second;
    gap.details["margin"] = target_d - second;
    if (n >= 5 && (found.witness.order() != 5 || canonical(found.witness) != k5_key))
        s.fail(unique, Json{{"witness", to_json(found.witness)}});
}

void structure_f(Suite& s) {
    const int n_max = s.n_or(8);
    s.report.inputs["n"] = n_max;
    s.report.inputs["t"] = Json::array({2, 3});

    auto& free = s.add("f-family-matching-free", "F_{t,l}(n) has matching number at most t-1 (t <= 4, n <= 10)");
    int checked = 0;
    for (int t = 2; t <= 4; ++t)
        for (int n = 2 * t; n <= 10; ++n)
            for (int l = 0; l <= t - 1; ++l) {
                ++checked;
                const int nu = matching_number(family_F(t, l, n));
                if (nu > t - 1) s.fail(free, Json{{"t", t}, {"l", l}, {"n", n}, {"matching_number", nu}});
            }
    free.details["instances"] = checked;

    for (int t = 2; t <= 3; ++t) {
        auto& a = s.add("contained-t" + std::to_string(t),
                        "every left-compressed M_" + std::to_string(t) +
                            "^2-free graph on [n] lies in some F_{t,l}(n)");
        long long graphs = 0;
        for (int n = 2 * t; n <= n_max; ++n) {
            std::vector<Hypergraph> families;
            for (int l = 0; l <= t - 1; ++l) families.push_back(family_F(t, l, n));
            FreePredicates p;
            p.matching_free = t;
            p.left_compressed = true;
            EnumerateOptions options;
            options.force_scale = s.params.force_scale;
            for_each_free(2, n, p, options, [&](const Hypergraph& g) {
                ++graphs;
                const bool inside = std::any_of(families.begin(), families.end(),
                                                [&](const Hypergraph& f) { return edges_within(g, f); });
                if (!inside) s.fail(a, Json{{"n", n}, {"graph", to_json(g)}});
                return true;
            });
        }
        a.details["graphs"] = graphs;
    }
}

void structure_g(Suite& s) {
    const int n_max = s.n_or(7);
    s.report.inputs["n"] = n_max;
    auto& free = s.add("g-family-intersecting", "G_0(n)..G_4(n) are M_2^3-free");
    for (int n = 6; n <= n_max; ++n)
        for (int k = 0; k <= 4; ++k)
            if (has_matching(family_G(k, n), 2)) s.fail(free, Json{{"k", k}, {"n", n}});

    // Both claims lean on the no-isolated-vertex hypothesis: K_5^3 on [6] is a
    // left-compressed intersecting graph outside every G_k(6).
    auto& contained = s.add("contained",
                            "every left-compressed M_2^3-free 3-graph on [n] without isolated vertices lies in some G_k(n)");
    auto& cover = s.add("vertex-cover",
                        "with no isolated vertex: all 12i are edges, {1,2} is a vertex cover, L+(2) is M_2^2-free");
    long long graphs = 0, spanning = 0, outside = 0;
    for (int n = 6; n <= n_max; ++n) {
        std::vector<Hypergraph> shapes;
        for (int k = 0; k <= 4; ++k) shapes.push_back(family_G(k, n));
        FreePredicates p;
        p.matching_free = 2;
        p.left_compressed = true;
        EnumerateOptions options;
        options.force_scale = s.params.force_scale;
        for_each_free(3, n, p, options, [&](const Hypergraph& g) {
            ++graphs;
            const bool inside =
                std::any_of(shapes.begin(), shapes.end(), [&](const Hypergraph& h) { return edges_within(g, h); });
            VertexSet covered = 0;
            for (VertexSet e : g.edges()) covered |= e;
            if (covered != g.vertex_set()) {
                outside += !inside;
                return true;
            }
            ++spanning;
            if (!inside) s.fail(contained, Json{{"n", n}, {"graph", to_json(g)}});
            bool ok = is_vertex_cover(g, vertex_bit(1) | vertex_bit(2));
            for (Vertex i = 3; i <= n; ++i) ok = ok && g.has_edge(vertex_bit(1) | vertex_bit(2) | vertex_bit(i));
            std::vector<VertexSet> plus;
            for (VertexSet e : g.edges())
                if (contains(e, 2) && !contains(e, 1)) plus.push_back(e & ~vertex_bit(2));
            ok = ok && !has_matching(Hypergraph::from_sets(2, n, plus), 2);
            if (!ok) s.fail(cover, Json{{"n", n}, {"graph", to_json(g)}});
            return true;
        });
    }
    contained.details["graphs"] = spanning;
    contained.details["enumerated"] = graphs;
    contained.details["outside_with_isolated"] = outside;
    cover.details["graphs"] = spanning;
}

Hypergraph star3(int n) {
    std::vector<VertexSet> edges;
    for (VertexSet pair : subsets_of_size(full_set(n) & ~vertex_bit(1), 2)) edges.push_back(pair | vertex_bit(1));
    return Hypergraph::from_sets(3, n, std::move(edges));
}

Hypergraph pad(const Hypergraph& g, int extra) {
    return Hypergraph::from_sets(g.uniformity(), g.order() + extra, {g.edges().begin(), g.edges().end()});
}

void bounds_lambda_b(Suite& s) {
    const int samples = s.samples_or(20);
    s.report.inputs["samples"] = samples;
    constexpr double tol = 1e-8;

    auto& corners = s.add("corner-points", "bound formulas match hand values at b = 1/t, l = t-1");
    for (int t = 2; t <= 4; ++t) {
        const Rational got = bound_f_family(t, t - 1, Rational(1, t));
        const Rational want = Rational(t - 1, 2 * t);
        if (got != want) s.fail(corners, Json{{"formula", "bound-f-family"}, {"t", t}, {"value", got.get_str()}});
    }
    if (bound_star(Rational(1, 3)) != Rational(2, 27)) s.fail(corners, Json{{"formula", "bound-star"}});
    if (bound_intersecting(Rational(1, 7)) != Rational(18, 343)) s.fail(corners, Json{{"formula", "bound-intersecting"}});
    if (bound_matching3(3, Rational(1, 8)) != Rational(23, 256)) s.fail(corners, Json{{"formula", "bound-matching3"}});

    auto check = [&](Assertion& a, const Hypergraph& g, const Rational& b, const Rational& bound, Json where) {
        const double value = s.lambda_b(g, to_double(b));
        const double excess = value - to_double(bound);
        if (!a.details.contains("worst_excess") || excess > a.details["worst_excess"].get<double>())
            a.details["worst_excess"] = excess;
        if (excess > tol) {
            where["graph"] = to_json(g);
            where["b"] = b.get_str();
            where["lambda_b"] = value;
            where["bound"] = to_double(bound);
            s.fail(a, std::move(where));
        }
    };

    auto& f = s.add("f-family", "lambda_b(F_{t,l}(n)) <= C(2t-1-2l,2)b^2 + lb - (l^2+l)/2 b^2, t <= 3, n <= 10, 0 < b <= 1/t");
    for (int t = 2; t <= 3; ++t)
        for (int l = 1; l <= t - 1; ++l)
            for (int n = 2 * t; n <= 10; ++n)
                for (int k = 1; k <= 6; ++k) {
                    const Rational b(k, 6 * t);
                    check(f, family_F(t, l, n), b, bound_f_family(t, l, b), Json{{"t", t}, {"l", l}, {"n", n}});
                }

    auto& star = s.add("star", "lambda_b of a 3-uniform star is at most b(1-b)^2/2, n <= 12, b <= 1/3");
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; k <= 6; ++k) {
            const Rational b(k, 18);
            check(star, star3(n), b, bound_star(b), Json{{"n", n}});
        }

    // Isolated vertices only enlarge the b-bounded feasible set, so each
    // class is padded with ceil(1/b) of them.
    FreePredicates p;
    p.matching_free = 2;
    p.no_isolated = true;
    EnumerateOptions options;
    options.force_scale = s.params.force_scale;
    const auto classes = enumerate_free(3, 6, p, options);
    for (int denom : {7, 6, 5}) {
        const Rational b(1, denom);
        auto& a = s.add("intersecting-b1/" + std::to_string(denom),
                        "M_2^3-free 3-graphs: lambda_b <= max{b(1-b)^2/2, b^2+4b^3} at b = 1/" + std::to_string(denom));
        a.details["classes"] = classes.size();
        for (const auto& g : classes) check(a, pad(g, denom), b, bound_intersecting(b), Json::object());
    }
    auto& small = s.add("intersecting-small-b", "M_2^3-free 3-graphs: lambda_b <= b(1-b)^2/2 for b <= 1/7");
    for (int denom : {7, 8, 10}) {
        const Rational b(1, denom);
        for (const auto& g : classes) check(small, pad(g, denom), b, bound_star(b), Json::object());
    }

    Rng rng(s.params.seed ^ 0x6d617463683333ULL);
    auto& m3 = s.add("matching3", "M_3^3-free 3-graphs on 9 vertices: lambda_b <= (t-1)/2 b(1-3b+6b^2), b < 1/8");
    auto& almost = s.add("almost-all-b", "M_3^3-free, all weights but one equal to b: lambda <= (t-1)/2 b(1-3b+4b^2)");
    const std::vector<Rational> grid = {Rational(1, 9), Rational(7, 60), Rational(6, 49), Rational(31, 250)};
    for (int k = 0; k < samples; ++k) {
        const Hypergraph g = random_matching_free(rng, 3, 9, 3, 0.3 + 0.7 * rng.unit());
        for (const Rational& b : grid) {
            check(m3, g, b, bound_matching3(3, b), Json{{"sample", k}});
            std::vector<Rational> x(9, b);
            x[8] = 1 - 8 * b;
            const Rational value = evaluate(g, std::span<const Rational>(x));
            if (value > bound_almost_all_b(3, b))
                s.fail(almost, Json{{"graph", to_json(g)}, {"b", b.get_str()}, {"value", value.get_str()}});
        }
    }
    m3.details["samples"] = samples;
}

// The bound needs n >= (s+1)r: K_{2s+1}^2 has s(2s+1) > s(2s) edges.
void frankl(Suite& s) {
    const int samples = s.samples_or(1000);
    s.report.inputs["samples"] = samples;
    Rng rng(s.params.seed ^ 0x6672616e6b6cULL);
    auto& a = s.add("edge-bound", "an n-vertex r-graph with matching number s has at most s C(n-1, r-1) edges, n >= (s+1)r");
    int checked = 0;
    for (int k = 0; k < samples; ++k) {
        const int r = rng.uniform(2, 3);
        const int n = rng.uniform(3 * r, 10);
        const Hypergraph g = rng.coin(0.3) ? random_graph(rng, r, n, rng.unit())
                                           : random_matching_free(rng, r, n, rng.uniform(2, n / r), 0.3 + 0.7 * rng.unit());
        const int nu = matching_number(g);
        if (n < (nu + 1) * r) continue;
        ++checked;
        if (static_cast<long long>(g.size()) > nu * binomial(n - 1, r - 1))
            s.fail(a, Json{{"graph", to_json(g)}, {"matching_number", nu}});
    }
    a.details["samples"] = samples;
    a.details["within_hypothesis"] = checked;
}

void compression(Suite& s) {
    const int samples = s.samples_or(500);
    s.report.inputs["samples"] = samples;
    Rng rng(s.params.seed ^ 0x636f6d70ULL);
    auto& value = s.add("lambda-nondecreasing", "x_i >= x_j implies lambda(pi_ij(G), x) >= lambda(G, x), exactly");
    auto& size = s.add("size-preserved", "|pi_ij(G)| = |G|");
    auto& matching = s.add("matching-free", "pi_ij keeps M_t^r-freeness");
    auto& clique = s.add("clique-free", "M_t^r-free, K_{tr-1}^r-free and {i,j} covered: pi_ij(G) is K_{tr-1}^r-free");
    auto& clique2 = s.add("clique-free-2graph", "r = 2, M_t^2-free and K_{2t-1}^2-free: pi_ij(G) is K_{2t-1}^2-free");
    int clique_cases = 0, clique2_cases = 0;
    for (int k = 0; k < samples; ++k) {
        const int r = rng.uniform(2, 3);
        const int n = rng.uniform(r + 1, 7);
        const Hypergraph g = rng.coin(0.5) ? random_graph(rng, r, n, rng.unit())
                                           : random_matching_free(rng, r, n, rng.uniform(2, 3), rng.unit());
        const auto x = random_rational_weights(rng, n);
        Vertex i = rng.uniform(1, n), j = rng.uniform(1, n - 1);
        if (j >= i) ++j;
        if (x[i - 1] < x[j - 1]) std::swap(i, j);
        const Hypergraph h = compress(g, i, j);
        const Rational before = evaluate(g, std::span<const Rational>(x));
        const Rational after = evaluate(h, std::span<const Rational>(x));
        Json where{{"graph", to_json(g)}, {"i", i}, {"j", j}};
        if (after < before) s.fail(value, where);
        if (h.size() != g.size()) s.fail(size, where);
        const int nu = matching_number(g);
        const int t = nu + 1;  // g is M_t-free for this t
        if (matching_number(h) > nu) s.fail(matching, where);
        const int p = t * r - 1;
        if (p <= n && !has_clique(g, p)) {
            if (covers_pair(g, i, j)) {
                ++clique_cases;
                if (has_clique(h, p)) s.fail(clique, where);
            }
            if (r == 2) {
                ++clique2_cases;
                if (has_clique(h, p)) s.fail(clique2, where);
            }
        }
    }
    value.details["samples"] = samples;
    clique.details["applicable"] = clique_cases;
    clique2.details["applicable"] = clique2_cases;
}

void dense_covers(Suite& s) {
    const int samples = s.samples_or(30);
    s.report.inputs["samples"] = samples;
    Rng rng(s.params.seed ^ 0x64656e7365ULL);
    auto& dense = s.add("dense", "dense_compressed_subgraph returns a dense graph");
    auto& covers = s.add("covers-pairs", "a dense graph covers pairs");
    auto& value = s.add("value", "the output keeps lambda within 1e-7");
    auto& replayed = s.add("replay", "replaying the trace reproduces the output");
    auto& compressed = s.add("y-compressed", "the output is left-compressed in its weight order");
    DenseCompressedOptions options;
    options.optimizer = s.config;
    for (int k = 0; k < samples; ++k) {
        const int r = rng.uniform(2, 3);
        const int n = rng.uniform(r, 7);
        const Hypergraph g = random_graph(rng, r, n, 0.2 + 0.6 * rng.unit());
        const auto out = dense_compressed_subgraph(g, options);
        Json where{{"graph", to_json(g)}};
        const auto report = is_dense(out.graph, lagrangian_oracle(s.config));
        if (report.status == DensityStatus::not_dense || !out.converged) s.fail(dense, where);
        if (report.status == DensityStatus::dense && !covers_pairs(out.graph)) s.fail(covers, where);
        const double original = s.lambda(g);
        if (out.value < original - 1e-7) s.fail(value, where);
        if (replay(g, out.trace) != out.graph) s.fail(replayed, where);
        std::vector<Vertex> order = weight_order(std::span<const double>(out.y));
        // Ties may be ordered either way; accept any order that is
        // consistent up to 1e-9 and compressed.
        bool ok = true;
        for (std::size_t a = 0; a < order.size() && ok; ++a)
            for (std::size_t b = a + 1; b < order.size() && ok; ++b)
                if (out.y[order[a] - 1] > out.y[order[b] - 1] + 1e-9 &&
                    !link_diff(out.graph, order[b], order[a]).empty())
                    ok = false;
        if (!ok) s.fail(compressed, where);
    }
    dense.details["samples"] = samples;
}

void kkt(Suite& s) {
    const int samples = s.samples_or(100);
    s.report.inputs["samples"] = samples;
    Rng rng(s.params.seed ^ 0x6b6b74ULL);
    auto& a = s.add("stationary", "optimizer witnesses satisfy d_i lambda = r lambda on the support within 1e-6");
    auto& bounded = s.add("stationary-bounded", "bounded optimizer witnesses satisfy the capped KKT conditions within 1e-6");
    double worst = 0.0, worst_b = 0.0;
    for (int k = 0; k < samples; ++k) {
        const int r = rng.uniform(2, 4);
        const int n = rng.uniform(r, 8);
        const Hypergraph g = random_graph(rng, r, n, 0.2 + 0.7 * rng.unit());
        const auto res = maximize(g, s.config);
        worst = std::max(worst, res.kkt_residual);
        if (res.kkt_residual > 1e-6) s.fail(a, Json{{"graph", to_json(g)}, {"residual", res.kkt_residual}});
        const double b = (1.0 + rng.unit()) / n;
        const auto rb = maximize_bounded(g, std::min(b, 1.0), s.config);
        worst_b = std::max(worst_b, rb.kkt_residual);
        if (rb.kkt_residual > 1e-6)
            s.fail(bounded, Json{{"graph", to_json(g)}, {"b", b}, {"residual", rb.kkt_residual}});
    }
    a.details["worst"] = worst;
    bounded.details["worst"] = worst_b;
}

void blowup_suite(Suite& s) {
    const int samples = s.samples_or(100);
    s.report.inputs["samples"] = samples;
    Rng rng(s.params.seed ^ 0x626c6f77ULL);
    auto& a = s.add("edge-bound", "a blowup G of L on n vertices has |G| <= lambda(L) n^r");
    double tightest = -1.0;
    for (int k = 0; k < samples; ++k) {
        const int r = rng.uniform(2, 3);
        const int m = rng.uniform(r, 5);
        const Hypergraph l = random_graph(rng, r, m, 0.3 + 0.7 * rng.unit());
        std::vector<int> sizes(m);
        for (int& v : sizes) v = rng.uniform(0, 4);
        const Hypergraph g = blowup(l, sizes);
        const double n = g.order();
        const double limit = (s.lambda(l) + 1e-6) * std::pow(n, r);
        if (static_cast<double>(g.size()) > limit)
            s.fail(a, Json{{"L", to_json(l)}, {"sizes", sizes}, {"edges", g.size()}});
        if (limit > 0) tightest = std::max(tightest, static_cast<double>(g.size()) / limit);
    }
    a.details["tightest_ratio"] = tightest;
}

void turan_construction(Suite& s) {
    const int t = s.t_or(2);
    const int n3 = s.n_or(16);
    const int n_small = std::min(n3, 12);
    s.report.inputs["t"] = t;
    s.report.inputs["n"] = n3;
    const int m = 3 * t - 1;

    auto& density = s.add("closed-form", "r! lambda(K_m^r) matches the density formulas and the optimizer");
    const std::vector<std::tuple<std::string, int, int, Rational>> forms = {
        {"density-matching3", 3, m, density_matching3(t)},
        {"density-star3", 3, 2 * t, density_star3(t)},
        {"density-star4", 4, 3 * t, density_star4(t)}};
    for (const auto& [name, r, size, value] : forms) {
        const Rational factorial = r == 3 ? 6 : 24;
        const Rational exact = factorial * lambda_complete(r, size);
        const double optimized = to_double(factorial) * s.lambda(complete_graph(r, size));
        density.details[name] = value.get_str();
        if (exact != value || std::abs(optimized - to_double(value)) > 1e-8)
            s.fail(density, Json{{"formula", name}, {"optimizer", optimized}});
    }

    auto& count = s.add("count", "|T_m^3(n)| = t_m^3(n), transversals against the symmetric-function count");
    Json counts = Json::object();
    for (int n = m; n <= n3; ++n) {
        const auto g = turan_graph(3, m, n);
        counts[std::to_string(n)] = g.size();
        if (static_cast<long long>(g.size()) != turan_count(3, m, n))
            s.fail(count, Json{{"n", n}, {"transversals", g.size()}, {"formula", turan_count(3, m, n)}});
    }
    count.details["counts"] = counts;

    struct Case {
        std::string id;
        int r, parts, n_max;
        Hypergraph f;
        int core;
    };
    const std::vector<Case> cases = {
        {"matching3", 3, m, n3, matching_graph(3, t), 3 * t},
        {"star3", 3, 2 * t, n_small, linear_star(3, t), 2 * t + 1},
        {"star4", 4, 3 * t, n_small, linear_star(4, t), 3 * t + 1},
    };
    for (const auto& c : cases) {
        const Hypergraph h = extension(c.f, c.core);
        auto& weak = s.add(c.id + "-weak-extension", "T_" + std::to_string(c.parts) + "^" + std::to_string(c.r) +
                                                         "(n) has no weak extension core of size " +
                                                         std::to_string(c.core));
        auto& ext = s.add(c.id + "-extension", "T_" + std::to_string(c.parts) + "^" + std::to_string(c.r) +
                                                   "(n) contains no copy of the extension H_" +
                                                   std::to_string(c.core));
        ext.details["extension_vertices"] = h.order();
        ext.details["extension_edges"] = h.size();
        for (int n = c.parts; n <= c.n_max; ++n) {
            const auto g = turan_graph(c.r, c.parts, n);
            if (contains_weak_extension(g, c.f, c.core)) s.fail(weak, Json{{"n", n}});
            if (has_subgraph(g, h)) s.fail(ext, Json{{"n", n}});
        }
        weak.details["n_max"] = c.n_max;
        ext.details["n_max"] = c.n_max;
    }
}

using SuiteFn = void (*)(Suite&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites = {
        {"stability-HK", stability_hk},   {"structure-F", structure_f},
        {"structure-G", structure_g},     {"bounds-lambda-b", bounds_lambda_b},
        {"frankl", frankl},               {"compression", compression},
        {"dense-covers", dense_covers},   {"kkt", kkt},
        {"blowup", blowup_suite},         {"turan-construction", turan_construction},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

Report verify(const std::string& suite, const VerifyParams& params) {
    std::string name = suite;
    if (name == "bounds-\xce\xbb" "b") name = "bounds-lambda-b";
    const auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
    Report report;
    report.suite = name;
    report.seed = params.seed;
    report.version = version();
    const auto start = std::chrono::steady_clock::now();
    Suite s(params, report);
    it->second(s);
    report.assertions.assign(std::make_move_iterator(s.pending.begin()), std::make_move_iterator(s.pending.end()));
    if (params.timing)
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace lagrangia
