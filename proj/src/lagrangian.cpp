#include "lagrangia/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace lagrangia {

namespace {

void check_length(const Hypergraph& g, std::size_t size) {
    if (static_cast<int>(size) != g.order())
        throw LagrangianError("weight vector has " + std::to_string(size) + " entries, graph has " +
                              std::to_string(g.order()) + " vertices");
}

template <class Scalar>
Scalar evaluate_impl(const Hypergraph& g, std::span<const Scalar> x) {
    check_length(g, x.size());
    Scalar total = 0;
    for (VertexSet e : g.edges()) {
        Scalar term = 1;
        for (VertexSet s = e; s; s &= s - 1) term *= x[std::countr_zero(s)];
        total += term;
    }
    return total;
}

template <class Scalar>
std::vector<Scalar> gradient_impl(const Hypergraph& g, std::span<const Scalar> x) {
    check_length(g, x.size());
    std::vector<Scalar> grad(x.size(), Scalar(0));
    for (VertexSet e : g.edges()) {
        for (VertexSet s = e; s; s &= s - 1) {
            const int i = std::countr_zero(s);
            Scalar term = 1;
            for (VertexSet o = e & ~(VertexSet{1} << i); o; o &= o - 1) term *= x[std::countr_zero(o)];
            grad[i] += term;
        }
    }
    return grad;
}

}  // namespace

double evaluate(const Hypergraph& g, std::span<const double> x) { return evaluate_impl(g, x); }
Rational evaluate(const Hypergraph& g, std::span<const Rational> x) { return evaluate_impl(g, x); }
std::vector<double> gradient(const Hypergraph& g, std::span<const double> x) { return gradient_impl(g, x); }
std::vector<Rational> gradient(const Hypergraph& g, std::span<const Rational> x) { return gradient_impl(g, x); }

bool is_feasible(std::span<const double> x, std::optional<double> bound, double tol) {
    double sum = 0.0;
    for (double v : x) {
        if (!(v >= 0.0)) return false;
        if (bound && v > *bound + tol) return false;
        sum += v;
    }
    return std::abs(sum - 1.0) <= tol;
}

bool is_feasible(std::span<const Rational> x, std::optional<Rational> bound) {
    Rational sum = 0;
    for (const auto& v : x) {
        if (v < 0) return false;
        if (bound && v > *bound) return false;
        sum += v;
    }
    return sum == 1;
}

WeightVector::WeightVector(std::vector<double> values, std::optional<double> bound) : values_(std::move(values)) {
    if (!is_feasible(values_, bound, 1e-12))
        throw LagrangianError(bound ? "weights are not a b-bounded point of the simplex"
                                    : "weights are not a point of the simplex");
}

namespace {

// Large steps make v - tau lose digits; push the rounding error onto free coordinates.
void repair_sum(std::vector<double>& x, double cap) {
    for (int pass = 0; pass < 3; ++pass) {
        const double residual = 1.0 - std::accumulate(x.begin(), x.end(), 0.0);
        if (residual == 0.0) return;
        int free_count = 0;
        for (double v : x) free_count += v > 0.0 && v < cap;
        if (free_count == 0) return;
        const double share = residual / free_count;
        for (double& v : x)
            if (v > 0.0 && v < cap) v = std::clamp(v + share, 0.0, cap);
    }
}

std::vector<double> simplex_projection(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double running = 0.0, theta = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        running += sorted[k];
        const double candidate = (running - 1.0) / static_cast<double>(k + 1);
        if (sorted[k] - candidate > 0.0) theta = candidate;
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::max(v[i] - theta, 0.0);
    repair_sum(x, std::numeric_limits<double>::infinity());
    return x;
}

double clipped_sum(std::span<const double> v, double tau, double b) {
    double sum = 0.0;
    for (double vi : v) sum += std::clamp(vi - tau, 0.0, b);
    return sum;
}

std::vector<double> box_projection(std::span<const double> v, double b) {
    const std::size_t n = v.size();
    if (static_cast<double>(n) * b < 1.0 - 1e-12)
        throw InfeasibleBound("no b-bounded weights: " + std::to_string(n) + " * " + std::to_string(b) + " < 1");
    double lo = *std::min_element(v.begin(), v.end()) - b;  // everything capped: sum n*b >= 1
    double hi = *std::max_element(v.begin(), v.end());      // everything zero
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (clipped_sum(v, mid, b) >= 1.0 ? lo : hi) = mid;
    }
    double tau = 0.5 * (lo + hi);
    // Solve exactly on the active set found by bisection.
    double free_sum = 0.0;
    int free_count = 0, capped = 0;
    for (double vi : v) {
        const double t = vi - tau;
        if (t >= b) ++capped;
        else if (t > 0.0) {
            free_sum += vi;
            ++free_count;
        }
    }
    if (free_count > 0) {
        const double exact = (free_sum + capped * b - 1.0) / free_count;
        bool consistent = true;
        for (double vi : v) {
            const double t_old = vi - tau, t_new = vi - exact;
            const int cls_old = t_old >= b ? 2 : (t_old > 0.0 ? 1 : 0);
            const int cls_new = t_new >= b ? 2 : (t_new > 0.0 ? 1 : 0);
            consistent = consistent && cls_old == cls_new;
        }
        if (consistent) tau = exact;
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(v[i] - tau, 0.0, b);
    repair_sum(x, b);
    return x;
}

}  // namespace

WeightVector project_simplex(std::span<const double> v) {
    if (v.empty()) throw InfeasibleBound("cannot project onto an empty simplex");
    return WeightVector(simplex_projection(v));
}

WeightVector project_simplex_box(std::span<const double> v, double b) {
    if (v.empty()) throw InfeasibleBound("cannot project onto an empty simplex");
    return WeightVector(box_projection(v, b), b);
}

double kkt_residual(const Hypergraph& g, std::span<const double> x, std::optional<double> bound,
                    double support_eps) {
    if (x.empty()) return 0.0;
    const auto grad = gradient(g, x);
    if (!bound) {
        const double target = g.uniformity() * evaluate(g, x);
        double residual = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double d = grad[i] - target;
            residual = std::max(residual, x[i] > support_eps ? std::abs(d) : std::max(0.0, d));
        }
        return residual;
    }
    // Multiplier mu: free coordinates need d = mu, zero ones d <= mu, capped
    // ones d >= mu. Best mu balances the largest upward and downward defects.
    const double b = *bound;
    double upper = -std::numeric_limits<double>::infinity();  // max d that must stay <= mu
    double lower = std::numeric_limits<double>::infinity();   // min d that must stay >= mu
    for (std::size_t i = 0; i < x.size(); ++i) {
        const bool zero = x[i] <= support_eps;
        const bool capped = x[i] >= b - support_eps;
        if (zero && capped) continue;  // b below eps: no constraint worth checking
        if (!capped) upper = std::max(upper, grad[i]);
        if (!zero) lower = std::min(lower, grad[i]);
    }
    if (!std::isfinite(upper) || !std::isfinite(lower)) return 0.0;
    return std::max(0.0, 0.5 * (upper - lower));
}

WeightVector symmetrize_uncovered(const Hypergraph& g, std::span<const double> x) {
    check_length(g, x.size());
    std::vector<double> y(x.begin(), x.end());
    for (VertexSet cls : twin_classes(g)) {
        if (set_size(cls) < 2) continue;
        double sum = 0.0;
        for (Vertex v : members(cls)) sum += y[v - 1];
        const double mean = sum / set_size(cls);
        for (Vertex v : members(cls)) y[v - 1] = mean;
    }
    double total = std::accumulate(y.begin(), y.end(), 0.0);
    if (total > 0.0)
        for (double& v : y) v /= total;
    return WeightVector(std::move(y));
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Ascent {
public:
    Ascent(const Hypergraph& g, std::optional<double> bound, const OptimizerConfig& config)
        : g_(g), bound_(bound), config_(config) {}

    std::vector<double> project(std::span<const double> v) const {
        return bound_ ? box_projection(v, *bound_) : simplex_projection(v);
    }

    struct Outcome {
        std::vector<double> x;
        double value = 0.0;
    };

    Outcome climb(std::vector<double> x) const {
        x = project(x);
        double f = evaluate(g_, x);
        double step = 1.0;
        std::vector<double> trial(x.size());
        for (int it = 0; it < config_.max_iterations; ++it) {
            const auto grad = gradient(g_, x);
            double s = std::min(step * 2.0, 1e6);
            bool moved = false;
            double f_new = f;
            std::vector<double> y;
            while (s > 1e-30) {
                for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + s * grad[i];
                y = project(trial);
                double slope = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) slope += grad[i] * (y[i] - x[i]);
                if (!(slope > 0.0)) break;  // projected gradient vanishes: stationary
                f_new = evaluate(g_, y);
                if (f_new >= f + config_.armijo * slope) {
                    moved = true;
                    break;
                }
                s *= 0.5;
            }
            if (!moved) break;
            const double improvement = f_new - f;
            x = std::move(y);
            f = f_new;
            step = s;
            if (improvement < config_.improvement_tol && kkt_residual(g_, x, bound_) < config_.kkt_tol) break;
        }
        return {std::move(x), f};
    }

    /// Local ascent, then twin averaging; re-ascend if averaging moved the point.
    Outcome polish(std::vector<double> start) const {
        Outcome out = climb(std::move(start));
        const WeightVector sym = symmetrize_uncovered(g_, out.x);
        std::vector<double> y(sym.values().begin(), sym.values().end());
        if (y != out.x) {
            Outcome again = climb(std::move(y));
            if (again.value >= out.value) out = std::move(again);
        }
        return out;
    }

private:
    const Hypergraph& g_;
    std::optional<double> bound_;
    const OptimizerConfig& config_;
};

bool better(const Ascent::Outcome& a, const Ascent::Outcome& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.x < b.x;
}

LagrangianResult optimize(const Hypergraph& g, std::optional<double> bound, const OptimizerConfig& config) {
    if (config.restarts < 0 || config.max_iterations <= 0 || config.armijo <= 0.0 || config.armijo >= 1.0)
        throw LagrangianError("invalid optimizer configuration");
    LagrangianResult result;
    result.restarts = config.restarts;
    result.bounded_by = bound;
    result.seed = config.seed;
    const int n = g.order();
    if (n == 0) {
        if (bound) result.infeasible = true;
        return result;
    }
    if (bound && static_cast<double>(n) * *bound < 1.0 - 1e-12) {
        result.infeasible = true;
        return result;
    }
    const Ascent ascent(g, bound, config);
    if (g.empty()) {
        result.witness = WeightVector(ascent.project(std::vector<double>(n, 1.0 / n)), bound);
        return result;
    }

    std::vector<std::vector<double>> starts;
    for (const auto& w : config.warm_starts) {
        check_length(g, w.size());
        starts.push_back(w);
    }
    starts.emplace_back(n, 1.0 / n);
    if (config.edge_starts) {
        for (VertexSet e : g.edges()) {
            std::vector<double> x(n, 0.0);
            for (Vertex v : members(e)) x[v - 1] = 1.0 / g.uniformity();
            starts.push_back(std::move(x));
        }
    }
    for (int k = 0; k < config.restarts; ++k) {
        std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(k) + 1)));
        std::vector<double> x(n);
        for (double& v : x) {
            const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
            v = -std::log(u);
        }
        const double total = std::accumulate(x.begin(), x.end(), 0.0);
        for (double& v : x) v /= total;
        starts.push_back(std::move(x));
    }

    std::vector<Ascent::Outcome> outcomes(starts.size());
    const int workers = std::max(1, std::min<int>(config.threads, static_cast<int>(starts.size())));
    if (workers == 1) {
        for (std::size_t k = 0; k < starts.size(); ++k) outcomes[k] = ascent.polish(starts[k]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < starts.size(); k += workers) outcomes[k] = ascent.polish(starts[k]);
            });
        for (auto& t : pool) t.join();
    }

    const Ascent::Outcome* best = &outcomes.front();
    for (const auto& o : outcomes)
        if (better(o, *best)) best = &o;

    result.starts = static_cast<int>(starts.size());
    result.value = evaluate(g, best->x);
    result.witness = WeightVector(best->x, bound);
    result.kkt_residual = kkt_residual(g, best->x, bound);
    return result;
}

}  // namespace

LagrangianResult maximize(const Hypergraph& g, const OptimizerConfig& config) {
    return optimize(g, std::nullopt, config);
}

LagrangianResult maximize_bounded(const Hypergraph& g, double b, const OptimizerConfig& config) {
    if (!(b > 0.0) || b > 1.0) throw LagrangianError("bound b must satisfy 0 < b <= 1, got " + std::to_string(b));
    return optimize(g, b, config);
}

Rational motzkin_straus(const Hypergraph& g) {
    if (g.uniformity() != 2) throw LagrangianError("the clique formula applies to 2-graphs only");
    if (g.empty()) return 0;
    const int omega = clique_number(g);
    return Rational(1, 2) * (Rational(1) - Rational(1, omega));
}

LagrangianOracle lagrangian_oracle(const OptimizerConfig& config) {
    return [config](const Hypergraph& g) { return maximize(g, config).value; };
}

}  // namespace lagrangia
