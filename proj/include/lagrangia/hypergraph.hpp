#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagrangia {

/// Vertices are 1-based, as in [n].
using Vertex = int;

/// An edge (or any vertex subset) as a bitmask: vertex v is bit v-1.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

class HypergraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr VertexSet vertex_bit(Vertex v) { return VertexSet{1} << (v - 1); }

constexpr VertexSet full_set(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, Vertex v) { return (s & vertex_bit(v)) != 0; }

/// Smallest vertex of a nonempty set.
constexpr Vertex min_vertex(VertexSet s) { return std::countr_zero(s) + 1; }

/// Lexicographic order of the sorted member sequences, for sets of equal size.
/// The lowest differing vertex decides: the set that holds it is smaller.
constexpr bool lex_less(VertexSet a, VertexSet b) {
    const VertexSet diff = a ^ b;
    return diff != 0 && (a & (diff & -diff)) != 0;
}

std::vector<Vertex> members(VertexSet s);
VertexSet make_set(std::span<const Vertex> vertices);
std::string format_set(VertexSet s);

/// Immutable r-uniform hypergraph on vertices 1..n.
///
/// Edges are kept deduplicated and in lexicographic order, so two values
/// compare equal exactly when (r, n, edges) agree.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Edgeless r-graph on n vertices.
    Hypergraph(int r, int n);

    /// Validating constructor from vertex lists. Throws HypergraphError
    /// naming the first offending edge.
    static Hypergraph build(int r, int n, const std::vector<std::vector<Vertex>>& edges);

    /// Same validation, edges given as masks.
    static Hypergraph from_sets(int r, int n, std::vector<VertexSet> edges);

    int uniformity() const { return r_; }
    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    std::span<const VertexSet> edges() const { return edges_; }
    VertexSet vertex_set() const { return full_set(n_); }

    bool has_edge(VertexSet e) const;
    int degree(Vertex v) const;
    std::vector<int> degrees() const;

    std::vector<std::vector<Vertex>> edge_lists() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int r_ = 2;
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

/// A subgraph whose vertices were renumbered 1..k; original[k-1] is the
/// label vertex k had in the parent graph.
struct Relabeled {
    Hypergraph graph;
    std::vector<Vertex> original;
};

/// G[V'], relabeled by increasing original label.
Relabeled induced(const Hypergraph& g, VertexSet keep);

/// L_G(S) on V(G) \ S, relabeled. |S| < r is required.
Relabeled link(const Hypergraph& g, VertexSet s);

/// I_G(i): the edges through i, on the same vertex set.
Hypergraph incident_edges(const Hypergraph& g, Vertex i);

/// L_G(j \ i): (r-1)-sets f avoiding {i,j} with f+j an edge and f+i not.
std::vector<VertexSet> link_diff(const Hypergraph& g, Vertex j, Vertex i);

/// The shift pi_ij: moves j's exclusive link onto i.
Hypergraph compress(const Hypergraph& g, Vertex i, Vertex j);

bool covers_pair(const Hypergraph& g, Vertex i, Vertex j);
bool covers_pairs(const Hypergraph& g);

/// Adjacency of the pair-coverage graph: bit w-1 of row v-1 is set when
/// {v,w} lies in some edge.
std::vector<VertexSet> pair_coverage(const Hypergraph& g);

/// order[k] is the vertex in position k of the linear order.
bool is_left_compressed(const Hypergraph& g, std::span<const Vertex> order);
bool is_left_compressed(const Hypergraph& g);

/// L_G(i \ j) and L_G(j \ i) both empty, i.e. swapping i and j is an automorphism.
bool are_twins(const Hypergraph& g, Vertex i, Vertex j);

/// Twin classes as masks, listed by smallest member.
std::vector<VertexSet> twin_classes(const Hypergraph& g);

/// Each vertex i of L becomes a class of part_sizes[i-1] vertices, classes
/// laid out consecutively; edges are all transversals of edges of L.
Hypergraph blowup(const Hypergraph& l, std::span<const int> part_sizes);

Relabeled remove_isolated(const Hypergraph& g);

/// Vertex v of g becomes perm[v-1].
Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm);

/// Sum over edges of the sum of their vertex labels.
long long s_value(const Hypergraph& g);

/// s_value with vertex v weighted by its 1-based position in the order.
long long s_value(const Hypergraph& g, std::span<const Vertex> order);

/// Vertex-disjoint union; vertices of b are shifted past those of a.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

long long binomial(int n, int k);

/// All k-subsets of `ground` as masks, in lexicographic order.
std::vector<VertexSet> subsets_of_size(VertexSet ground, int k);

}  // namespace lagrangia
