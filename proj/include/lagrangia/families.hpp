#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagrangia/lagrangian.hpp"
#include "lagrangia/rational.hpp"

namespace lagrangia {

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// C(m, r) / m^r.
Rational lambda_complete(int r, int m);
/// (1 - 1/t) / 2.
Rational lambda_complete_graph(int t);
/// m (m-1) ... (m-r+1).
Rational falling_factorial(int m, int r);
/// t_m^r(n) as an exact integer.
Rational turan_edges(int r, int m, int n);

/// r! lambda(K_m^r) = [m]_r / m^r, the density of the three families:
/// matchings of 3-graphs (m = 3t-1), linear 3-stars (m = 2t), linear
/// 4-stars (m = 3t).
Rational density_matching3(int t);
Rational density_star3(int t);
Rational density_star4(int t);

/// b-bounded Lagrangian bounds.
/// F_{t,l}(n), 1 <= l <= t-1, 0 < b <= 1/t:
///   C(2t-1-2l, 2) b^2 + l b - (l^2 + l)/2 b^2
Rational bound_f_family(int t, int l, const Rational& b);
/// 3-uniform stars, 0 < b <= 1/3: b (1-b)^2 / 2.
Rational bound_star(const Rational& b);
/// Intersecting 3-graphs, 0 < b <= 1/5: max{b (1-b)^2 / 2, b^2 + 4 b^3}.
Rational bound_intersecting(const Rational& b);
/// M_t^3-free, every weight but one at the cap, t >= 3, 0 < b < 1/(3t-1):
///   (t-1)/2 b (1 - 3b + 4b^2)
Rational bound_almost_all_b(int t, const Rational& b);
/// M_t^3-free on >= 3t vertices, t >= 3, 0 < b <= 1/(3t-1):
///   (t-1)/2 b (1 - 3b + 6b^2)
Rational bound_matching3(int t, const Rational& b);

/// The rational part of the matching stability constant, s = 3t-4:
///   (9s^4 + 15s^3 - 30s^2 - 12s + 8) / (6 (2s^2+3s-2)^2 (s+3)^2)
Rational c1_rational_term(int t);

/// c1(t) = min{lambda(K_{3t-1}^3) - lambda(K_{3t-1}^{3-}), rational term}.
/// The middle Lagrangian is numeric; the optimizer value v is a lower
/// bound and v + tolerance an assumed upper bound, hence an interval.
struct C1Interval {
    double lower = 0.0;
    double upper = 0.0;
    Rational rational_term;
    double lambda_minus = 0.0;
    double tolerance = 0.0;
};
C1Interval c1_interval(int t, const OptimizerConfig& config = {}, double tolerance = 1e-8);

struct FormulaInfo {
    std::string name;
    std::vector<std::string> params;
    std::string description;
};

const std::vector<FormulaInfo>& formula_catalog();

/// Evaluates a catalog formula by name; integer parameters must be given
/// as integral rationals. Throws DomainError on unknown names, missing
/// parameters, or parameters outside the formula's domain.
Rational closed_form(const std::string& name, const std::map<std::string, Rational>& params);

}  // namespace lagrangia
