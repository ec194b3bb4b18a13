#pragma once

// Seeded generators and brute-force oracles shared by the unit tests.
// Oracles deliberately avoid the library's search code.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lagrangia/constructions.hpp"
#include "lagrangia/hypergraph.hpp"
#include "lagrangia/lagrangian.hpp"
#include "lagrangia/rational.hpp"

namespace testing {

using namespace lagrangia;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
    bool coin(double p) { return unit() < p; }

    Hypergraph graph(int r, int n, double p) {
        std::vector<VertexSet> edges;
        for (VertexSet e : subsets_of_size(full_set(n), r))
            if (coin(p)) edges.push_back(e);
        return Hypergraph::from_sets(r, n, std::move(edges));
    }

    std::vector<double> simplex_point(int n) {
        std::vector<double> x(n);
        for (double& v : x) v = -std::log(1.0 - unit());
        const double total = std::accumulate(x.begin(), x.end(), 0.0);
        for (double& v : x) v /= total;
        return x;
    }

    std::vector<Rational> rational_point(int n) {
        std::vector<Rational> x(n);
        Rational total = 0;
        for (auto& v : x) {
            v = uniform(0, 12);
            total += v;
        }
        if (total == 0) {
            x[0] = 1;
            return x;
        }
        for (auto& v : x) v /= total;
        return x;
    }

    std::vector<Vertex> permutation(int n) {
        std::vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), 1);
        std::shuffle(p.begin(), p.end(), rng_);
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Largest set of pairwise disjoint edges over all edge subsets (|G| <= 20).
inline int naive_matching_number(const Hypergraph& g) {
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        VertexSet used = 0;
        bool disjoint = true;
        for (std::size_t k = 0; k < m && disjoint; ++k)
            if (mask >> k & 1u) {
                disjoint = (used & edges[k]) == 0;
                used |= edges[k];
            }
        if (disjoint) best = std::max(best, std::popcount(mask));
    }
    return best;
}

/// Largest vertex set all of whose r-subsets are edges; r-1 when edgeless.
inline int naive_clique_number(const Hypergraph& g) {
    const int n = g.order(), r = g.uniformity();
    int best = r - 1;
    for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
        if (set_size(s) <= best || set_size(s) < r) continue;
        bool complete = true;
        for (VertexSet e : subsets_of_size(s, r))
            if (!g.has_edge(e)) {
                complete = false;
                break;
            }
        if (complete) best = set_size(s);
    }
    return best;
}

/// Tries every injection V(F) -> V(G).
inline bool naive_has_subgraph(const Hypergraph& g, const Hypergraph& f) {
    const int k = f.order(), n = g.order();
    if (k > n) return false;
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<Vertex> chosen;
        for (int i = 0; i < n; ++i)
            if (pick[i]) chosen.push_back(pool[i]);
        do {
            bool ok = true;
            for (VertexSet e : f.edges()) {
                VertexSet image = 0;
                for (Vertex v : members(e)) image |= vertex_bit(chosen[v - 1]);
                if (!g.has_edge(image)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

/// Compression straight from the set formula:
/// pi_ij(G) = {E : E in G, E not in A_ij} u {(E - j) + i : E in A_ij},
/// A_ij = {E in G : j in E, i not in E, (E - j) + i not in G}.
inline Hypergraph naive_compress(const Hypergraph& g, Vertex i, Vertex j) {
    std::vector<VertexSet> out;
    for (VertexSet e : g.edges()) {
        const VertexSet moved = (e & ~vertex_bit(j)) | vertex_bit(i);
        const bool shift = contains(e, j) && !contains(e, i) && !g.has_edge(moved);
        out.push_back(shift ? moved : e);
    }
    return Hypergraph::from_sets(g.uniformity(), g.order(), std::move(out));
}

/// Same edges up to isomorphism, by trying every permutation (n <= 8).
inline bool naive_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.uniformity() != b.uniformity() || a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (relabel(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Every edge of g is an edge of h (same labels).
inline bool edges_subset(const Hypergraph& g, const Hypergraph& h) {
    return std::all_of(g.edges().begin(), g.edges().end(), [&](VertexSet e) { return h.has_edge(e); });
}

/// Every labeled r-graph on [n], as edge masks over the r-subsets.
template <class Visit>
void for_each_labeled(int r, int n, Visit visit) {
    const auto cells = subsets_of_size(full_set(n), r);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
        std::vector<VertexSet> edges;
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (mask >> k & 1u) edges.push_back(cells[k]);
        visit(Hypergraph::from_sets(r, n, std::move(edges)));
    }
}

}  // namespace testing
