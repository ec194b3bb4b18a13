#include "lagrangia/detection.hpp"

#include <algorithm>
#include <limits>

namespace lagrangia {

namespace {

class MatchingSearch {
public:
    MatchingSearch(int r, int target) : r_(r), target_(target) {}

    int run(const std::vector<VertexSet>& edges) {
        // Greedy seed.
        VertexSet used = 0;
        for (VertexSet e : edges)
            if ((e & used) == 0) {
                used |= e;
                ++best_;
            }
        if (best_ < target_) branch(edges, 0);
        return best_;
    }

private:
    void branch(const std::vector<VertexSet>& edges, int taken) {
        if (best_ >= target_) return;
        if (edges.empty()) {
            best_ = std::max(best_, taken);
            return;
        }
        VertexSet support = 0;
        for (VertexSet e : edges) support |= e;
        const int bound = taken + std::min<int>(static_cast<int>(edges.size()), set_size(support) / r_);
        if (bound <= best_) return;

        // Either the lowest vertex is matched by one of its edges, or it is left out.
        const VertexSet v = support & -support;
        std::vector<VertexSet> rest;
        for (VertexSet e : edges) {
            if ((e & v) == 0) continue;
            rest.clear();
            for (VertexSet f : edges)
                if ((f & e) == 0) rest.push_back(f);
            branch(rest, taken + 1);
            if (best_ >= target_) return;
        }
        rest.clear();
        for (VertexSet f : edges)
            if ((f & v) == 0) rest.push_back(f);
        branch(rest, taken);
    }

    int r_;
    int target_;
    int best_ = 0;
};

}  // namespace

int matching_number(const Hypergraph& g) {
    const std::vector<VertexSet> edges(g.edges().begin(), g.edges().end());
    return MatchingSearch(g.uniformity(), std::numeric_limits<int>::max()).run(edges);
}

bool has_matching(const Hypergraph& g, int t) {
    if (t <= 0) return true;
    const std::vector<VertexSet> edges(g.edges().begin(), g.edges().end());
    return MatchingSearch(g.uniformity(), t).run(edges) >= t;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Hypergraph& g) : g_(g), r_(g.uniformity()) {}

    int run(int stop_at) {
        stop_at_ = stop_at;
        best_ = r_ - 1;
        if (g_.empty()) return best_;
        best_ = r_;
        // Any set of fewer than r vertices is trivially complete.
        grow(0, 0, g_.vertex_set());
        return best_;
    }

private:
    /// True when every r-set of clique+v that contains v is an edge.
    bool extends(VertexSet clique, Vertex v) const {
        const int size = set_size(clique);
        if (size + 1 < r_) return true;
        for (VertexSet t : subsets_of_size(clique, r_ - 1))
            if (!g_.has_edge(t | vertex_bit(v))) return false;
        return true;
    }

    void grow(VertexSet clique, int size, VertexSet candidates) {
        if (best_ >= stop_at_) return;
        if (size > best_) best_ = size;
        if (size + set_size(candidates) <= best_) return;
        for (VertexSet c = candidates; c; c &= c - 1) {
            const Vertex v = min_vertex(c);
            if (size + set_size(c) <= best_) return;
            const VertexSet next = clique | vertex_bit(v);
            VertexSet later = 0;
            for (VertexSet rest = c & (c - 1); rest; rest &= rest - 1) {
                const Vertex w = min_vertex(rest);
                if (extends_pair(clique, v, w)) later |= vertex_bit(w);
            }
            grow(next, size + 1, later);
        }
    }

    /// clique+v is complete already; checks the r-sets of clique+v+w through w.
    bool extends_pair(VertexSet clique, Vertex v, Vertex w) const {
        return extends(clique | vertex_bit(v), w);
    }

    const Hypergraph& g_;
    int r_;
    int best_ = 0;
    int stop_at_ = 0;
};

}  // namespace

int clique_number(const Hypergraph& g) {
    return CliqueSearch(g).run(std::numeric_limits<int>::max());
}

bool has_clique(const Hypergraph& g, int p) {
    if (p < g.uniformity()) return p <= g.order();
    return CliqueSearch(g).run(p) >= p;
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Hypergraph& g, const Hypergraph& f, bool require_covered)
        : g_(g), f_(f), require_covered_(require_covered) {
        if (g.uniformity() != f.uniformity())
            throw HypergraphError("subgraph test needs equal uniformity (" + std::to_string(f.uniformity()) +
                                  " vs " + std::to_string(g.uniformity()) + ")");
        g_cover_ = pair_coverage(g);
        f_cover_ = pair_coverage(f);
        g_deg_ = g.degrees();
        f_deg_ = f.degrees();
        plan();
    }

    void run(const std::function<bool(const Embedding&)>& visit) {
        if (f_.order() > g_.order()) return;
        visit_ = &visit;
        image_.assign(f_.order(), 0);
        stopped_ = false;
        extend(0, 0);
    }

private:
    void plan() {
        const int n = f_.order();
        VertexSet placed = 0;
        for (int k = 0; k < n; ++k) {
            Vertex pick = 0;
            int pick_links = -1, pick_deg = -1;
            for (Vertex u = 1; u <= n; ++u) {
                if (contains(placed, u)) continue;
                const int links = set_size(f_cover_[u - 1] & placed);
                const int deg = f_deg_[u - 1];
                if (links > pick_links || (links == pick_links && deg > pick_deg)) {
                    pick = u;
                    pick_links = links;
                    pick_deg = deg;
                }
            }
            order_.push_back(pick);
            placed |= vertex_bit(pick);
            // Edges whose last vertex in the plan is `pick`.
            std::vector<VertexSet> closing;
            for (VertexSet e : f_.edges())
                if (contains(e, pick) && (e & ~placed) == 0) closing.push_back(e);
            closing_.push_back(std::move(closing));
        }
    }

    void extend(std::size_t k, VertexSet used) {
        if (stopped_) return;
        if (k == order_.size()) {
            if (!(*visit_)(Embedding{image_})) stopped_ = true;
            return;
        }
        const Vertex u = order_[k];
        for (Vertex w = 1; w <= g_.order(); ++w) {
            if (contains(used, w) || g_deg_[w - 1] < f_deg_[u - 1]) continue;
            bool ok = true;
            for (std::size_t a = 0; a < k && ok; ++a) {
                const Vertex prev = order_[a];
                const bool need = require_covered_ || contains(f_cover_[u - 1], prev);
                if (need && !contains(g_cover_[w - 1], image_[prev - 1])) ok = false;
            }
            if (!ok) continue;
            image_[u - 1] = w;
            for (VertexSet e : closing_[k]) {
                VertexSet mapped = 0;
                for (VertexSet s = e; s; s &= s - 1) mapped |= vertex_bit(image_[std::countr_zero(s)]);
                if (!g_.has_edge(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok) extend(k + 1, used | vertex_bit(w));
            image_[u - 1] = 0;
            if (stopped_) return;
        }
    }

    const Hypergraph& g_;
    const Hypergraph& f_;
    bool require_covered_;
    std::vector<VertexSet> g_cover_, f_cover_;
    std::vector<int> g_deg_, f_deg_;
    std::vector<Vertex> order_;
    std::vector<std::vector<VertexSet>> closing_;
    std::vector<Vertex> image_;
    const std::function<bool(const Embedding&)>* visit_ = nullptr;
    bool stopped_ = false;
};

/// Some clique of `size` vertices inside `candidates` of the coverage graph.
std::optional<VertexSet> find_clique(const std::vector<VertexSet>& adj, VertexSet candidates, int size) {
    if (size == 0) return VertexSet{0};
    if (set_size(candidates) < size) return std::nullopt;
    for (VertexSet c = candidates; c; c &= c - 1) {
        const Vertex v = min_vertex(c);
        const VertexSet later = (c & (c - 1)) & adj[v - 1];
        if (auto rest = find_clique(adj, later, size - 1)) return *rest | vertex_bit(v);
    }
    return std::nullopt;
}

}  // namespace

void for_each_embedding(const Hypergraph& g, const Hypergraph& f,
                        const std::function<bool(const Embedding&)>& visit, bool require_covered_image) {
    EmbeddingSearch(g, f, require_covered_image).run(visit);
}

std::optional<Embedding> find_subgraph(const Hypergraph& g, const Hypergraph& f) {
    std::optional<Embedding> found;
    for_each_embedding(g, f, [&](const Embedding& e) {
        found = e;
        return false;
    });
    return found;
}

bool has_subgraph(const Hypergraph& g, const Hypergraph& f) { return find_subgraph(g, f).has_value(); }

std::optional<VertexSet> find_weak_extension(const Hypergraph& g, const Hypergraph& f, int p) {
    if (p < f.order())
        throw HypergraphError("core size " + std::to_string(p) + " is smaller than |V(F)| = " +
                              std::to_string(f.order()));
    if (g.uniformity() != f.uniformity()) throw HypergraphError("weak extension test needs equal uniformity");
    if (p > g.order()) return std::nullopt;
    const auto adj = pair_coverage(g);
    std::optional<VertexSet> core;
    for_each_embedding(
        g, f,
        [&](const Embedding& e) {
            VertexSet img = 0, common = g.vertex_set();
            for (Vertex w : e.image) {
                img |= vertex_bit(w);
                common &= adj[w - 1];
            }
            if (auto extra = find_clique(adj, common & ~img, p - f.order())) {
                core = img | *extra;
                return false;
            }
            return true;
        },
        /*require_covered_image=*/true);
    return core;
}

bool contains_weak_extension(const Hypergraph& g, const Hypergraph& f, int p) {
    return find_weak_extension(g, f, p).has_value();
}

bool is_vertex_cover(const Hypergraph& g, VertexSet s) {
    return std::all_of(g.edges().begin(), g.edges().end(), [s](VertexSet e) { return (e & s) != 0; });
}

DensityReport is_dense(const Hypergraph& g, const LagrangianOracle& lambda, const DensityOptions& options) {
    DensityReport report;
    if (g.order() == 0) return report;
    report.lambda = lambda(g);
    for (Vertex v = 1; v <= g.order(); ++v)
        report.deleted.push_back(lambda(induced(g, g.vertex_set() & ~vertex_bit(v)).graph));
    // Subgraph optima are lower bounds on lambda(G) as well.
    report.lambda = std::max(report.lambda, *std::max_element(report.deleted.begin(), report.deleted.end()));
    report.min_gap = std::numeric_limits<double>::infinity();
    for (Vertex v = 1; v <= g.order(); ++v) {
        const double gap = report.lambda - report.deleted[v - 1];
        if (gap < report.min_gap) {
            report.min_gap = gap;
            report.weakest = v;
        }
    }
    if (report.min_gap > options.tol)
        report.status = DensityStatus::dense;
    else if (report.min_gap <= options.equality_tol)
        report.status = DensityStatus::not_dense;
    else
        report.status = DensityStatus::inconclusive;
    return report;
}

const char* to_string(DensityStatus s) {
    switch (s) {
        case DensityStatus::dense: return "dense";
        case DensityStatus::not_dense: return "not-dense";
        case DensityStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace lagrangia
