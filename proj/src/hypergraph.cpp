#include "lagrangia/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace lagrangia {

std::vector<Vertex> members(VertexSet s) {
    std::vector<Vertex> out;
    out.reserve(set_size(s));
    while (s) {
        out.push_back(min_vertex(s));
        s &= s - 1;
    }
    return out;
}

VertexSet make_set(std::span<const Vertex> vertices) {
    VertexSet s = 0;
    for (Vertex v : vertices) s |= vertex_bit(v);
    return s;
}

std::string format_set(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : members(s)) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

namespace {

void normalize(std::vector<VertexSet>& edges) {
    std::sort(edges.begin(), edges.end(), lex_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void check_shape(int r, int n) {
    if (r < 1) throw HypergraphError("uniformity must be positive, got " + std::to_string(r));
    if (n < 0 || n > kMaxVertices)
        throw HypergraphError("vertex count " + std::to_string(n) + " outside [0," +
                              std::to_string(kMaxVertices) + "]");
}

}  // namespace

Hypergraph::Hypergraph(int r, int n) : r_(r), n_(n) { check_shape(r, n); }

Hypergraph Hypergraph::build(int r, int n, const std::vector<std::vector<Vertex>>& edges) {
    check_shape(r, n);
    std::vector<VertexSet> sets;
    sets.reserve(edges.size());
    for (const auto& e : edges) {
        auto describe = [&] {
            std::string s = "{";
            for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
            return s + "}";
        };
        if (static_cast<int>(e.size()) != r)
            throw HypergraphError("edge " + describe() + " has " + std::to_string(e.size()) +
                                  " vertices, expected " + std::to_string(r));
        VertexSet s = 0;
        for (Vertex v : e) {
            if (v < 1 || v > n) throw HypergraphError("vertex out of range in edge " + describe());
            if (contains(s, v)) throw HypergraphError("repeated vertex in edge " + describe());
            s |= vertex_bit(v);
        }
        sets.push_back(s);
    }
    Hypergraph g(r, n);
    normalize(sets);
    g.edges_ = std::move(sets);
    return g;
}

Hypergraph Hypergraph::from_sets(int r, int n, std::vector<VertexSet> edges) {
    check_shape(r, n);
    for (VertexSet e : edges) {
        if (set_size(e) != r)
            throw HypergraphError("edge " + format_set(e) + " has " + std::to_string(set_size(e)) +
                                  " vertices, expected " + std::to_string(r));
        if ((e & ~full_set(n)) != 0) throw HypergraphError("vertex out of range in edge " + format_set(e));
    }
    Hypergraph g(r, n);
    normalize(edges);
    g.edges_ = std::move(edges);
    return g;
}

bool Hypergraph::has_edge(VertexSet e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e, lex_less);
}

int Hypergraph::degree(Vertex v) const {
    int d = 0;
    for (VertexSet e : edges_) d += contains(e, v);
    return d;
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (VertexSet e : edges_)
        for (VertexSet s = e; s; s &= s - 1) ++d[std::countr_zero(s)];
    return d;
}

std::vector<std::vector<Vertex>> Hypergraph::edge_lists() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(edges_.size());
    for (VertexSet e : edges_) out.push_back(members(e));
    return out;
}

namespace {

/// Maps a set over the parent's labels to the compacted labels of `kept`.
VertexSet compact(VertexSet s, std::span<const Vertex> kept_sorted) {
    VertexSet out = 0;
    for (std::size_t k = 0; k < kept_sorted.size(); ++k)
        if (contains(s, kept_sorted[k])) out |= vertex_bit(static_cast<Vertex>(k + 1));
    return out;
}

}  // namespace

Relabeled induced(const Hypergraph& g, VertexSet keep) {
    keep &= g.vertex_set();
    const std::vector<Vertex> kept = members(keep);
    std::vector<VertexSet> edges;
    for (VertexSet e : g.edges())
        if ((e & ~keep) == 0) edges.push_back(compact(e, kept));
    return {Hypergraph::from_sets(g.uniformity(), static_cast<int>(kept.size()), std::move(edges)), kept};
}

Relabeled link(const Hypergraph& g, VertexSet s) {
    if ((s & ~g.vertex_set()) != 0) throw HypergraphError("link set " + format_set(s) + " outside the vertex set");
    const int k = set_size(s);
    if (k >= g.uniformity())
        throw HypergraphError("link set " + format_set(s) + " must have fewer than r vertices");
    const VertexSet rest = g.vertex_set() & ~s;
    const std::vector<Vertex> kept = members(rest);
    std::vector<VertexSet> edges;
    for (VertexSet e : g.edges())
        if ((e & s) == s) edges.push_back(compact(e & ~s, kept));
    return {Hypergraph::from_sets(g.uniformity() - k, static_cast<int>(kept.size()), std::move(edges)), kept};
}

Hypergraph incident_edges(const Hypergraph& g, Vertex i) {
    std::vector<VertexSet> edges;
    for (VertexSet e : g.edges())
        if (contains(e, i)) edges.push_back(e);
    return Hypergraph::from_sets(g.uniformity(), g.order(), std::move(edges));
}

std::vector<VertexSet> link_diff(const Hypergraph& g, Vertex j, Vertex i) {
    if (i == j) throw HypergraphError("link_diff needs distinct vertices, got " + std::to_string(i) + " twice");
    const VertexSet bi = vertex_bit(i), bj = vertex_bit(j);
    std::vector<VertexSet> out;
    for (VertexSet e : g.edges()) {
        if ((e & bj) == 0 || (e & bi) != 0) continue;
        const VertexSet f = e & ~bj;
        if (!g.has_edge(f | bi)) out.push_back(f);
    }
    return out;
}

Hypergraph compress(const Hypergraph& g, Vertex i, Vertex j) {
    if (i == j) throw HypergraphError("compression needs distinct vertices, got " + std::to_string(i) + " twice");
    const VertexSet bi = vertex_bit(i), bj = vertex_bit(j);
    std::vector<VertexSet> edges;
    edges.reserve(g.size());
    for (VertexSet e : g.edges()) {
        if ((e & bj) != 0 && (e & bi) == 0) {
            const VertexSet moved = (e & ~bj) | bi;
            edges.push_back(g.has_edge(moved) ? e : moved);
        } else {
            edges.push_back(e);
        }
    }
    return Hypergraph::from_sets(g.uniformity(), g.order(), std::move(edges));
}

bool covers_pair(const Hypergraph& g, Vertex i, Vertex j) {
    const VertexSet p = vertex_bit(i) | vertex_bit(j);
    return std::any_of(g.edges().begin(), g.edges().end(), [p](VertexSet e) { return (e & p) == p; });
}

std::vector<VertexSet> pair_coverage(const Hypergraph& g) {
    std::vector<VertexSet> adj(g.order(), 0);
    for (VertexSet e : g.edges())
        for (VertexSet s = e; s; s &= s - 1) adj[std::countr_zero(s)] |= e;
    for (int v = 1; v <= g.order(); ++v) adj[v - 1] &= ~vertex_bit(v);
    return adj;
}

bool covers_pairs(const Hypergraph& g) {
    const auto adj = pair_coverage(g);
    for (int v = 1; v <= g.order(); ++v)
        if (adj[v - 1] != (g.vertex_set() & ~vertex_bit(v))) return false;
    return true;
}

bool is_left_compressed(const Hypergraph& g, std::span<const Vertex> order) {
    if (static_cast<int>(order.size()) != g.order())
        throw HypergraphError("order must list all " + std::to_string(g.order()) + " vertices");
    if (make_set(order) != g.vertex_set()) throw HypergraphError("order is not a permutation of the vertices");
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (!link_diff(g, order[b], order[a]).empty()) return false;
    return true;
}

bool is_left_compressed(const Hypergraph& g) {
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), 1);
    return is_left_compressed(g, order);
}

bool are_twins(const Hypergraph& g, Vertex i, Vertex j) {
    return link_diff(g, i, j).empty() && link_diff(g, j, i).empty();
}

std::vector<VertexSet> twin_classes(const Hypergraph& g) {
    std::vector<VertexSet> classes;
    VertexSet assigned = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
        if (contains(assigned, v)) continue;
        VertexSet cls = vertex_bit(v);
        for (Vertex w = v + 1; w <= g.order(); ++w)
            if (!contains(assigned, w) && are_twins(g, v, w)) cls |= vertex_bit(w);
        assigned |= cls;
        classes.push_back(cls);
    }
    return classes;
}

Hypergraph blowup(const Hypergraph& l, std::span<const int> part_sizes) {
    if (static_cast<int>(part_sizes.size()) != l.order())
        throw HypergraphError("blowup needs one part size per vertex (" + std::to_string(l.order()) + ")");
    std::vector<VertexSet> parts;
    int next = 1;
    for (int size : part_sizes) {
        if (size < 0) throw HypergraphError("negative part size");
        VertexSet part = 0;
        for (int k = 0; k < size; ++k) part |= vertex_bit(next + k);
        next += size;
        parts.push_back(part);
    }
    const int n = next - 1;
    if (n > kMaxVertices) throw HypergraphError("blowup exceeds " + std::to_string(kMaxVertices) + " vertices");

    std::vector<VertexSet> edges;
    for (VertexSet e : l.edges()) {
        const std::vector<Vertex> classes = members(e);
        // Odometer over one representative per class.
        std::vector<std::vector<Vertex>> choices;
        bool any_empty = false;
        for (Vertex c : classes) {
            choices.push_back(members(parts[c - 1]));
            any_empty = any_empty || choices.back().empty();
        }
        if (any_empty) continue;
        std::vector<std::size_t> idx(classes.size(), 0);
        while (true) {
            VertexSet t = 0;
            for (std::size_t k = 0; k < idx.size(); ++k) t |= vertex_bit(choices[k][idx[k]]);
            edges.push_back(t);
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    return Hypergraph::from_sets(l.uniformity(), n, std::move(edges));
}

Relabeled remove_isolated(const Hypergraph& g) {
    VertexSet used = 0;
    for (VertexSet e : g.edges()) used |= e;
    return induced(g, used);
}

Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order() || make_set(perm) != g.vertex_set())
        throw HypergraphError("relabeling is not a permutation of the vertices");
    std::vector<VertexSet> edges;
    edges.reserve(g.size());
    for (VertexSet e : g.edges()) {
        VertexSet t = 0;
        for (VertexSet s = e; s; s &= s - 1) t |= vertex_bit(perm[std::countr_zero(s)]);
        edges.push_back(t);
    }
    return Hypergraph::from_sets(g.uniformity(), g.order(), std::move(edges));
}

long long s_value(const Hypergraph& g) {
    long long total = 0;
    for (VertexSet e : g.edges())
        for (Vertex v : members(e)) total += v;
    return total;
}

long long s_value(const Hypergraph& g, std::span<const Vertex> order) {
    std::vector<long long> rank(g.order() + 1, 0);
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<long long>(k) + 1;
    long long total = 0;
    for (VertexSet e : g.edges())
        for (Vertex v : members(e)) total += rank[v];
    return total;
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    if (a.uniformity() != b.uniformity()) throw HypergraphError("disjoint union needs equal uniformity");
    const int n = a.order() + b.order();
    if (n > kMaxVertices) throw HypergraphError("disjoint union exceeds vertex limit");
    std::vector<VertexSet> edges(a.edges().begin(), a.edges().end());
    for (VertexSet e : b.edges()) edges.push_back(e << a.order());
    return Hypergraph::from_sets(a.uniformity(), n, std::move(edges));
}

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

namespace {

void subsets_rec(const std::vector<Vertex>& pool, std::size_t start, int k, VertexSet acc,
                 std::vector<VertexSet>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = start; i + k <= pool.size(); ++i)
        subsets_rec(pool, i + 1, k - 1, acc | vertex_bit(pool[i]), out);
}

}  // namespace

std::vector<VertexSet> subsets_of_size(VertexSet ground, int k) {
    std::vector<VertexSet> out;
    if (k < 0) return out;
    subsets_rec(members(ground), 0, k, 0, out);
    return out;
}

}  // namespace lagrangia
