#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lagrangia/hypergraph.hpp"
#include "lagrangia/lagrangian.hpp"

namespace lagrangia {

/// The requested search is larger than the desk-scale guard allows.
class ScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cell limit C(n, r) for enumeration: `fallback`, or LAGRANGIA_MAX_CELLS when set.
long long max_cells(long long fallback = 35);

/// Throws ScaleError when C(n, r) exceeds `limit` and `force` is off.
void check_scale(int r, int n, long long limit, bool force);

struct FreePredicates {
    /// Fewer than t pairwise disjoint edges.
    std::optional<int> matching_free;
    /// No p-set with all r-subsets present.
    std::optional<int> clique_free;
    /// No copy of any of these.
    std::vector<Hypergraph> subgraph_free;
    /// Output filter, not hereditary.
    bool no_isolated = false;
    /// Switches to labeled enumeration of graphs on [n] left-compressed
    /// relative to the natural order.
    bool left_compressed = false;

    /// The hereditary (edge-deletion closed) part.
    bool admits(const Hypergraph& g) const;
};

struct EnumerateOptions {
    std::optional<std::size_t> limit;
    bool force_scale = false;
    int threads = 1;
    /// Frontier file written before each level (unlabeled mode only).
    std::string checkpoint;
    /// Start from the frontier stored in `checkpoint`.
    bool resume = false;
};

/// Streams every isomorphism class of r-graphs on at most n vertices that
/// satisfies the predicates, each once, in canonical form. Classes are
/// grown level by level in the number of edges; a child is kept when its
/// canonical key is new and it passes the hereditary predicates. With
/// no_isolated the emitted graphs have their isolated vertices removed
/// (the edgeless class becomes the 0-vertex graph); otherwise graphs are
/// padded to exactly n vertices.
///
/// With left_compressed the search is over labeled graphs on [n] instead:
/// down-sets of the shifting order, no isomorphism reduction.
///
/// The visitor returns false to stop early.
void for_each_free(int r, int n, const FreePredicates& predicates, const EnumerateOptions& options,
                   const std::function<bool(const Hypergraph&)>& visit);

std::vector<Hypergraph> enumerate_free(int r, int n, const FreePredicates& predicates,
                                       const EnumerateOptions& options = {});

/// Freeness predicates equivalent to "contains no copy of f": matchings and
/// complete graphs get their dedicated searches.
FreePredicates forbidding(const Hypergraph& f);

struct FreeMaximum {
    double value = 0.0;
    Hypergraph witness;
    LagrangianResult best;
    /// Every class examined with its Lagrangian, in enumeration order.
    std::vector<std::pair<Hypergraph, double>> classes;
};

/// max lambda over f-free r-graphs on at most n_max vertices with no
/// isolated vertex, skipping classes isomorphic to an exclusion.
FreeMaximum max_lagrangian_over_free(int r, int n_max, const Hypergraph& f, const std::vector<Hypergraph>& exclusions,
                                     const OptimizerConfig& config = {}, const EnumerateOptions& options = {});

/// ex(n, f) by exhaustive isomorphism-reduced search. Guard: C(n, r) <= 21.
long long turan_bruteforce(int r, int n, const Hypergraph& f, bool force_scale = false);
long long turan_bruteforce(int r, int n, const FreePredicates& predicates, bool force_scale = false);

}  // namespace lagrangia
