#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lagrangia/detection.hpp"
#include "lagrangia/hypergraph.hpp"
#include "lagrangia/rational.hpp"

namespace lagrangia {

class LagrangianError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// No b-bounded point of the simplex exists (n * b < 1).
class InfeasibleBound : public LagrangianError {
public:
    using LagrangianError::LagrangianError;
};

/// Sum over edges of the product of their weights. Exact for rationals.
double evaluate(const Hypergraph& g, std::span<const double> x);
Rational evaluate(const Hypergraph& g, std::span<const Rational> x);

/// d/dx_i: sum over edges through i of the product of the other weights.
std::vector<double> gradient(const Hypergraph& g, std::span<const double> x);
std::vector<Rational> gradient(const Hypergraph& g, std::span<const Rational> x);

/// Nonnegative, sums to one (within `tol`), every entry <= bound if given.
bool is_feasible(std::span<const double> x, std::optional<double> bound = std::nullopt, double tol = 1e-12);
bool is_feasible(std::span<const Rational> x, std::optional<Rational> bound = std::nullopt);

/// A point of the simplex, optionally b-bounded. Construction validates.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<double> values, std::optional<double> bound = std::nullopt);

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    operator std::span<const double>() const { return values_; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<double> values_;
};

/// Euclidean projection onto the simplex (sorted-threshold method).
WeightVector project_simplex(std::span<const double> v);

/// Projection onto the simplex intersected with the box x <= b; the
/// threshold is bracketed by bisection then solved exactly on the active set.
/// Throws InfeasibleBound when n * b < 1.
WeightVector project_simplex_box(std::span<const double> v, double b);

struct OptimizerConfig {
    /// Seeded random starts, on top of the uniform and per-edge starts.
    int restarts = 50;
    int max_iterations = 10000;
    /// Armijo sufficient-ascent constant for the backtracking line search.
    double armijo = 1e-4;
    double improvement_tol = 1e-14;
    double kkt_tol = 1e-10;
    std::uint64_t seed = 0;
    /// One start on the support of each edge.
    bool edge_starts = true;
    /// Worker threads for independent starts; the result does not depend on it.
    int threads = 1;
    /// Extra starting points tried first (projected onto the feasible set).
    std::vector<std::vector<double>> warm_starts;
};

struct LagrangianResult {
    double value = 0.0;
    WeightVector witness;
    double kkt_residual = 0.0;
    int restarts = 0;
    int starts = 0;
    std::optional<double> bounded_by;
    bool infeasible = false;
    std::uint64_t seed = 0;
};

/// Multi-start projected gradient ascent with Armijo backtracking, followed
/// by twin averaging. `value` is a lower bound on lambda(G) with a KKT
/// certificate; it is not a proof of global optimality.
LagrangianResult maximize(const Hypergraph& g, const OptimizerConfig& config = {});

/// Same over the b-bounded simplex. Returns value 0 with `infeasible` set
/// when n * b < 1. Throws LagrangianError unless 0 < b <= 1.
LagrangianResult maximize_bounded(const Hypergraph& g, double b, const OptimizerConfig& config = {});

/// Exact lambda of a 2-graph from its clique number: (1 - 1/w) / 2.
Rational motzkin_straus(const Hypergraph& g);

/// Stationarity defect: |d_i - r*lambda| on coordinates above `support_eps`,
/// the excess max(0, d_i - r*lambda) on the rest. With a bound, the
/// multiplier is fitted to the free coordinates and capped coordinates only
/// need d_i >= multiplier.
double kkt_residual(const Hypergraph& g, std::span<const double> x, std::optional<double> bound = std::nullopt,
                    double support_eps = 1e-12);

/// Replaces the weights of each twin class (pairs with empty mutual link
/// differences) by the class mean. Never lowers lambda(G, x), keeps bounds.
WeightVector symmetrize_uncovered(const Hypergraph& g, std::span<const double> x);

/// maximize(...).value as a LagrangianOracle.
LagrangianOracle lagrangian_oracle(const OptimizerConfig& config = {});

}  // namespace lagrangia
