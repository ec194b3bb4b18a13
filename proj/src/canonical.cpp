#include "lagrangia/canonical.hpp"

#include <algorithm>
#include <map>

namespace lagrangia {

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Hypergraph& g) : g_(g), n_(g.order()) {
        incident_.resize(n_);
        for (std::size_t k = 0; k < g.size(); ++k)
            for (Vertex v : members(g.edges()[k])) incident_[v - 1].push_back(g.edges()[k]);
        twin_of_.assign(n_, 0);
        for (VertexSet cls : twin_classes(g))
            for (Vertex v : members(cls)) twin_of_[v - 1] = cls;
    }

    std::vector<Vertex> run() {
        std::vector<int> colors(n_);
        const auto deg = g_.degrees();
        // Seed with degrees; refinement renumbers canonically.
        for (int v = 0; v < n_; ++v) colors[v] = deg[v];
        colors = reindex(colors, [&](int v) { return std::vector<long long>{colors[v]}; });
        search(colors);
        return best_perm_;
    }

private:
    template <class Key>
    std::vector<int> reindex(const std::vector<int>& /*unused*/, Key key) {
        std::vector<std::vector<long long>> keys(n_);
        for (int v = 0; v < n_; ++v) keys[v] = key(v);
        std::vector<std::vector<long long>> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> out(n_);
        for (int v = 0; v < n_; ++v)
            out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
        return out;
    }

    static int count_colors(const std::vector<int>& c) {
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    std::vector<int> refine(std::vector<int> colors) {
        int count = count_colors(colors);
        while (true) {
            auto next = reindex(colors, [&](int v) {
                std::vector<std::vector<int>> tuples;
                tuples.reserve(incident_[v].size());
                for (VertexSet e : incident_[v]) {
                    std::vector<int> t;
                    for (Vertex w : members(e))
                        if (w != v + 1) t.push_back(colors[w - 1]);
                    std::sort(t.begin(), t.end());
                    tuples.push_back(std::move(t));
                }
                std::sort(tuples.begin(), tuples.end());
                std::vector<long long> key{colors[v]};
                for (const auto& t : tuples) {
                    key.push_back(-1);
                    key.insert(key.end(), t.begin(), t.end());
                }
                return key;
            });
            const int next_count = count_colors(next);
            colors = std::move(next);
            if (next_count == count) return colors;
            count = next_count;
        }
    }

    void search(std::vector<int> colors) {
        colors = refine(std::move(colors));
        const int count = count_colors(colors);
        if (count == n_) {
            leaf(colors);
            return;
        }
        std::vector<int> cell_size(count, 0);
        for (int c : colors) ++cell_size[c];
        int target = 0;
        while (cell_size[target] < 2) ++target;

        VertexSet tried_twins = 0;
        for (int v = 0; v < n_; ++v) {
            if (colors[v] != target) continue;
            if (tried_twins & vertex_bit(v + 1)) continue;
            tried_twins |= twin_of_[v];
            auto child = reindex(colors, [&](int w) {
                return std::vector<long long>{colors[w], w == v ? 0 : 1};
            });
            search(std::move(child));
        }
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<VertexSet> relabeled;
        relabeled.reserve(g_.size());
        for (VertexSet e : g_.edges()) {
            VertexSet t = 0;
            for (VertexSet s = e; s; s &= s - 1) t |= vertex_bit(colors[std::countr_zero(s)] + 1);
            relabeled.push_back(t);
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (!have_best_ || relabeled < best_edges_) {
            have_best_ = true;
            best_edges_ = std::move(relabeled);
            best_perm_.resize(n_);
            for (int v = 0; v < n_; ++v) best_perm_[v] = colors[v] + 1;
        }
    }

    const Hypergraph& g_;
    int n_;
    std::vector<std::vector<VertexSet>> incident_;
    std::vector<VertexSet> twin_of_;
    bool have_best_ = false;
    std::vector<VertexSet> best_edges_;
    std::vector<Vertex> best_perm_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Hypergraph& g) {
    if (g.order() == 0) return {};
    return CanonicalSearch(g).run();
}

Hypergraph canonical_form(const Hypergraph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical(const Hypergraph& g) {
    const Hypergraph c = canonical_form(g);
    std::string key;
    key.reserve(2 + 8 * c.size());
    key.push_back(static_cast<char>(c.uniformity()));
    key.push_back(static_cast<char>(c.order()));
    for (VertexSet e : c.edges())
        for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((e >> (8 * b)) & 0xff));
    return key;
}

Hypergraph from_canonical(const std::string& key) {
    if (key.size() < 2 || (key.size() - 2) % 8 != 0) throw HypergraphError("malformed canonical key");
    const int r = static_cast<unsigned char>(key[0]);
    const int n = static_cast<unsigned char>(key[1]);
    std::vector<VertexSet> edges;
    for (std::size_t off = 2; off < key.size(); off += 8) {
        VertexSet e = 0;
        for (int b = 0; b < 8; ++b) e |= VertexSet{static_cast<unsigned char>(key[off + b])} << (8 * b);
        edges.push_back(e);
    }
    return Hypergraph::from_sets(r, n, std::move(edges));
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.uniformity() != b.uniformity() || a.order() != b.order() || a.size() != b.size()) return false;
    return canonical(a) == canonical(b);
}

}  // namespace lagrangia
