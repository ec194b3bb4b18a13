#include "lagrangia/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "json.hpp"

#include "lagrangia/canonical.hpp"
#include "lagrangia/detection.hpp"

namespace lagrangia {

long long max_cells(long long fallback) {
    if (const char* env = std::getenv("LAGRANGIA_MAX_CELLS")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw ScaleError(std::string("LAGRANGIA_MAX_CELLS is not an integer: '") + env + "'");
        }
    }
    return fallback;
}

void check_scale(int r, int n, long long limit, bool force) {
    if (r < 1 || n < 0 || n > kMaxVertices) throw HypergraphError("bad enumeration shape r=" + std::to_string(r) +
                                                                  " n=" + std::to_string(n));
    const long long cells = binomial(n, r);
    if (!force && cells > limit)
        throw ScaleError("C(" + std::to_string(n) + "," + std::to_string(r) + ") = " + std::to_string(cells) +
                         " exceeds the scale guard of " + std::to_string(limit) +
                         " (force it, or raise LAGRANGIA_MAX_CELLS)");
}

bool FreePredicates::admits(const Hypergraph& g) const {
    if (matching_free && has_matching(g, *matching_free)) return false;
    if (clique_free && has_clique(g, *clique_free)) return false;
    for (const auto& f : subgraph_free)
        if (has_subgraph(g, f)) return false;
    return true;
}

namespace {

bool has_isolated(const Hypergraph& g) {
    VertexSet covered = 0;
    for (VertexSet e : g.edges()) covered |= e;
    return covered != g.vertex_set();
}

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

std::string from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string in checkpoint");
    std::string out;
    for (std::size_t k = 0; k < hex.size(); k += 2) out += static_cast<char>(std::stoi(hex.substr(k, 2), nullptr, 16));
    return out;
}

void write_checkpoint(const std::string& path, int r, int n, std::size_t level, const std::set<std::string>& frontier) {
    nlohmann::json j;
    j["r"] = r;
    j["n"] = n;
    j["level"] = level;
    auto& list = j["frontier"] = nlohmann::json::array();
    for (const auto& key : frontier) list.push_back(to_hex(key));
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint " + path);
        out << j.dump() << '\n';
    }
    std::rename(tmp.c_str(), path.c_str());
}

std::set<std::string> read_checkpoint(const std::string& path, int r, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint " + path);
    const auto j = nlohmann::json::parse(in);
    if (j.at("r").get<int>() != r || j.at("n").get<int>() != n)
        throw std::runtime_error("checkpoint " + path + " is for a different (r, n)");
    std::set<std::string> frontier;
    for (const auto& h : j.at("frontier")) frontier.insert(from_hex(h.get<std::string>()));
    return frontier;
}

/// Children of one level, canonical keys that pass the hereditary predicates.
std::set<std::string> next_level(const std::vector<std::string>& level, const FreePredicates& predicates,
                                 int threads) {
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(level.size())));
    std::vector<std::set<std::string>> found(workers);
    auto work = [&](int w) {
        std::set<std::string> rejected;
        for (std::size_t k = w; k < level.size(); k += workers) {
            const Hypergraph g = from_canonical(level[k]);
            std::vector<VertexSet> edges(g.edges().begin(), g.edges().end());
            for (VertexSet cell : subsets_of_size(g.vertex_set(), g.uniformity())) {
                if (g.has_edge(cell)) continue;
                edges.push_back(cell);
                const Hypergraph child = Hypergraph::from_sets(g.uniformity(), g.order(), edges);
                edges.pop_back();
                std::string key = canonical(child);
                if (found[w].count(key) || rejected.count(key)) continue;
                if (predicates.admits(child))
                    found[w].insert(std::move(key));
                else
                    rejected.insert(std::move(key));
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::set<std::string> merged;
    for (auto& s : found) merged.merge(s);
    return merged;
}

void unlabeled(int r, int n, const FreePredicates& predicates, const EnumerateOptions& options,
               const std::function<bool(const Hypergraph&)>& emit) {
    std::set<std::string> frontier;
    std::size_t level = 0;
    if (options.resume) {
        if (options.checkpoint.empty()) throw std::invalid_argument("resume needs a checkpoint file");
        std::ifstream probe(options.checkpoint);
        const auto j = nlohmann::json::parse(probe);
        level = j.at("level").get<std::size_t>();
        frontier = read_checkpoint(options.checkpoint, r, n);
    } else {
        const Hypergraph empty(r, n);
        if (predicates.admits(empty)) frontier.insert(canonical(empty));
    }
    while (!frontier.empty()) {
        if (!options.checkpoint.empty()) write_checkpoint(options.checkpoint, r, n, level, frontier);
        std::vector<std::string> keys(frontier.begin(), frontier.end());
        for (const auto& key : keys)
            if (!emit(from_canonical(key))) return;
        frontier = next_level(keys, predicates, options.threads);
        ++level;
    }
}

class ShiftedSearch {
public:
    ShiftedSearch(int r, int n, const FreePredicates& predicates, const std::function<bool(const Hypergraph&)>& emit)
        : r_(r), n_(n), predicates_(predicates), emit_(emit) {
        cells_ = subsets_of_size(full_set(n), r);
        auto sum = [](VertexSet s) {
            int total = 0;
            for (Vertex v : members(s)) total += v;
            return total;
        };
        std::stable_sort(cells_.begin(), cells_.end(), [&](VertexSet a, VertexSet b) { return sum(a) < sum(b); });
        for (std::size_t k = 0; k < cells_.size(); ++k) index_[cells_[k]] = k;
        for (VertexSet c : cells_) {
            std::vector<std::size_t> preds;
            for (Vertex a : members(c))
                if (a > 1 && !contains(c, a - 1)) preds.push_back(index_.at((c & ~vertex_bit(a)) | vertex_bit(a - 1)));
            preds_.push_back(std::move(preds));
        }
        chosen_.assign(cells_.size(), 0);
    }

    void run() { descend(0); }

private:
    bool descend(std::size_t k) {
        if (k == cells_.size()) return emit_(Hypergraph::from_sets(r_, n_, edges_));
        // Include first so larger families come out earlier within a branch.
        if (std::all_of(preds_[k].begin(), preds_[k].end(), [&](std::size_t p) { return chosen_[p] != 0; })) {
            edges_.push_back(cells_[k]);
            if (predicates_.admits(Hypergraph::from_sets(r_, n_, edges_))) {
                chosen_[k] = 1;
                const bool go_on = descend(k + 1);
                chosen_[k] = 0;
                if (!go_on) {
                    edges_.pop_back();
                    return false;
                }
            }
            edges_.pop_back();
        }
        return descend(k + 1);
    }

    int r_, n_;
    const FreePredicates& predicates_;
    const std::function<bool(const Hypergraph&)>& emit_;
    std::vector<VertexSet> cells_;
    std::map<VertexSet, std::size_t> index_;
    std::vector<std::vector<std::size_t>> preds_;
    std::vector<char> chosen_;
    std::vector<VertexSet> edges_;
};

}  // namespace

void for_each_free(int r, int n, const FreePredicates& predicates, const EnumerateOptions& options,
                   const std::function<bool(const Hypergraph&)>& visit) {
    check_scale(r, n, max_cells(), options.force_scale);
    std::size_t emitted = 0;
    if (options.limit && *options.limit == 0) return;
    auto counted = [&](const Hypergraph& g) {
        if (!visit(g)) return false;
        return !(options.limit && ++emitted >= *options.limit);
    };
    if (predicates.left_compressed) {
        if (options.resume || !options.checkpoint.empty())
            throw std::invalid_argument("checkpoints are only supported for isomorphism-class enumeration");
        const std::function<bool(const Hypergraph&)> emit = [&](const Hypergraph& g) {
            if (predicates.no_isolated && has_isolated(g)) return true;
            return counted(g);
        };
        ShiftedSearch(r, n, predicates, emit).run();
        return;
    }
    unlabeled(r, n, predicates, options, [&](const Hypergraph& g) {
        return counted(predicates.no_isolated ? remove_isolated(g).graph : g);
    });
}

std::vector<Hypergraph> enumerate_free(int r, int n, const FreePredicates& predicates, const EnumerateOptions& options) {
    std::vector<Hypergraph> out;
    for_each_free(r, n, predicates, options, [&](const Hypergraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

FreePredicates forbidding(const Hypergraph& f) {
    FreePredicates p;
    const int r = f.uniformity();
    const auto edges = f.edges();
    VertexSet covered = 0;
    bool disjoint = true;
    for (VertexSet e : edges) {
        disjoint = disjoint && (covered & e) == 0;
        covered |= e;
    }
    if (!edges.empty() && disjoint && f.order() == r * static_cast<int>(edges.size()))
        p.matching_free = static_cast<int>(edges.size());
    else if (f.order() >= r && static_cast<long long>(edges.size()) == binomial(f.order(), r))
        p.clique_free = f.order();
    else
        p.subgraph_free.push_back(f);
    return p;
}

FreeMaximum max_lagrangian_over_free(int r, int n_max, const Hypergraph& f, const std::vector<Hypergraph>& exclusions,
                                     const OptimizerConfig& config, const EnumerateOptions& options) {
    if (f.uniformity() != r) throw HypergraphError("forbidden graph has the wrong uniformity");
    FreePredicates predicates = forbidding(f);
    predicates.no_isolated = true;
    std::set<std::string> excluded;
    for (const auto& x : exclusions) excluded.insert(canonical(remove_isolated(x).graph));
    FreeMaximum out;
    bool have = false;
    for_each_free(r, n_max, predicates, options, [&](const Hypergraph& g) {
        if (excluded.count(canonical(g))) return true;
        auto res = maximize(g, config);
        out.classes.emplace_back(g, res.value);
        if (!have || res.value > out.value) {
            have = true;
            out.value = res.value;
            out.witness = g;
            out.best = std::move(res);
        }
        return true;
    });
    return out;
}

long long turan_bruteforce(int r, int n, const FreePredicates& predicates, bool force_scale) {
    check_scale(r, n, max_cells(21), force_scale);
    FreePredicates p = predicates;
    p.no_isolated = false;
    p.left_compressed = false;
    EnumerateOptions options;
    options.force_scale = true;  // guarded above with the tighter limit
    long long best = 0;
    for_each_free(r, n, p, options, [&](const Hypergraph& g) {
        best = std::max<long long>(best, static_cast<long long>(g.size()));
        return true;
    });
    return best;
}

long long turan_bruteforce(int r, int n, const Hypergraph& f, bool force_scale) {
    if (f.uniformity() != r) throw HypergraphError("forbidden graph has the wrong uniformity");
    return turan_bruteforce(r, n, forbidding(f), force_scale);
}

}  // namespace lagrangia
