#include "lagrangia/families.hpp"

#include <algorithm>

#include "lagrangia/constructions.hpp"

namespace lagrangia {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

Rational power(const Rational& base, int e) {
    Rational out = 1;
    for (int k = 0; k < e; ++k) out *= base;
    return out;
}

void require_b(const Rational& b, const Rational& cap, bool closed, const std::string& what) {
    require(b > 0 && (closed ? b <= cap : b < cap),
            what + " needs 0 < b " + (closed ? "<= " : "< ") + cap.get_str() + ", got b = " + b.get_str());
}

}  // namespace

Rational lambda_complete(int r, int m) {
    require(r >= 1 && m >= 1, "lambda(K_m^r) needs r, m >= 1");
    return Rational(static_cast<long>(binomial(m, r))) / power(Rational(m), r);
}

Rational lambda_complete_graph(int t) {
    require(t >= 1, "lambda(K_t^2) needs t >= 1");
    return Rational(1, 2) * (1 - Rational(1, t));
}

Rational falling_factorial(int m, int r) {
    require(r >= 0, "[m]_r needs r >= 0");
    Rational out = 1;
    for (int k = 0; k < r; ++k) out *= m - k;
    return out;
}

Rational turan_edges(int r, int m, int n) {
    require(r >= 1 && m >= r && n >= m, "t_m^r(n) needs n >= m >= r >= 1");
    return Rational(static_cast<long>(turan_count(r, m, n)));
}

Rational density_matching3(int t) {
    require(t >= 2, "needs t >= 2");
    return falling_factorial(3 * t - 1, 3) / power(Rational(3 * t - 1), 3);
}

Rational density_star3(int t) {
    require(t >= 2, "needs t >= 2");
    return falling_factorial(2 * t, 3) / power(Rational(2 * t), 3);
}

Rational density_star4(int t) {
    require(t >= 2, "needs t >= 2");
    return falling_factorial(3 * t, 4) / power(Rational(3 * t), 4);
}

Rational bound_f_family(int t, int l, const Rational& b) {
    require(t >= 2, "F-family bound needs t >= 2");
    require(l >= 1 && l <= t - 1, "F-family bound needs 1 <= l <= t-1");
    require_b(b, Rational(1, t), true, "F-family bound");
    const int k = 2 * t - 1 - 2 * l;
    return Rational(static_cast<long>(k >= 2 ? binomial(k, 2) : 0)) * b * b + l * b - Rational(l * l + l, 2) * b * b;
}

Rational bound_star(const Rational& b) {
    require_b(b, Rational(1, 3), true, "star bound");
    return Rational(1, 2) * b * (1 - b) * (1 - b);
}

Rational bound_intersecting(const Rational& b) {
    require_b(b, Rational(1, 5), true, "intersecting bound");
    const Rational star = Rational(1, 2) * b * (1 - b) * (1 - b);
    const Rational other = b * b + 4 * b * b * b;
    return std::max(star, other);
}

Rational bound_almost_all_b(int t, const Rational& b) {
    require(t >= 3, "almost-all-b bound needs t >= 3");
    require_b(b, Rational(1, 3 * t - 1), false, "almost-all-b bound");
    return Rational(t - 1, 2) * b * (1 - 3 * b + 4 * b * b);
}

Rational bound_matching3(int t, const Rational& b) {
    require(t >= 3, "matching bound needs t >= 3");
    require_b(b, Rational(1, 3 * t - 1), true, "matching bound");
    return Rational(t - 1, 2) * b * (1 - 3 * b + 6 * b * b);
}

Rational c1_rational_term(int t) {
    require(t >= 2, "c1 needs t >= 2");
    const Rational s = 3 * t - 4;
    const Rational num = 9 * power(s, 4) + 15 * power(s, 3) - 30 * s * s - 12 * s + 8;
    const Rational q = 2 * s * s + 3 * s - 2;
    return num / (6 * q * q * (s + 3) * (s + 3));
}

C1Interval c1_interval(int t, const OptimizerConfig& config, double tolerance) {
    require(t >= 2, "c1 needs t >= 2");
    const int m = 3 * t - 1;
    const Hypergraph full = complete_graph(3, m);
    std::vector<VertexSet> edges(full.edges().begin() + 1, full.edges().end());
    const Hypergraph minus = Hypergraph::from_sets(3, m, std::move(edges));
    C1Interval out;
    out.rational_term = c1_rational_term(t);
    out.lambda_minus = maximize(minus, config).value;
    out.tolerance = tolerance;
    const double lk = to_double(lambda_complete(3, m));
    const double term = to_double(out.rational_term);
    out.lower = std::min(lk - (out.lambda_minus + tolerance), term);
    out.upper = std::min(lk - out.lambda_minus, term);
    return out;
}

const std::vector<FormulaInfo>& formula_catalog() {
    static const std::vector<FormulaInfo> catalog = {
        {"lambda-complete", {"r", "m"}, "C(m,r)/m^r"},
        {"lambda-complete-graph", {"t"}, "(1 - 1/t)/2, the Lagrangian of a 2-graph with clique number t"},
        {"falling-factorial", {"m", "r"}, "[m]_r = m(m-1)...(m-r+1)"},
        {"turan-count", {"r", "m", "n"}, "edges of the balanced blowup T_m^r(n)"},
        {"density-matching3", {"t"}, "[3t-1]_3/(3t-1)^3"},
        {"density-star3", {"t"}, "[2t]_3/(2t)^3"},
        {"density-star4", {"t"}, "[3t]_4/(3t)^4"},
        {"bound-f-family", {"t", "l", "b"}, "C(2t-1-2l,2) b^2 + l b - (l^2+l)/2 b^2"},
        {"bound-star", {"b"}, "b(1-b)^2/2"},
        {"bound-intersecting", {"b"}, "max{b(1-b)^2/2, b^2 + 4b^3}"},
        {"bound-almost-all-b", {"t", "b"}, "(t-1)/2 b(1 - 3b + 4b^2)"},
        {"bound-matching3", {"t", "b"}, "(t-1)/2 b(1 - 3b + 6b^2)"},
        {"c1-rational-term", {"t"}, "(9s^4+15s^3-30s^2-12s+8)/(6(2s^2+3s-2)^2(s+3)^2), s = 3t-4"},
    };
    return catalog;
}

namespace {

const Rational& param(const std::map<std::string, Rational>& params, const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end()) throw DomainError("missing parameter '" + name + "'");
    return it->second;
}

int integer(const std::map<std::string, Rational>& params, const std::string& name) {
    const Rational& q = param(params, name);
    if (q.get_den() != 1 || !q.get_num().fits_sint_p())
        throw DomainError("parameter '" + name + "' must be an integer, got " + q.get_str());
    return static_cast<int>(q.get_num().get_si());
}

}  // namespace

Rational closed_form(const std::string& name, const std::map<std::string, Rational>& params) {
    const auto& catalog = formula_catalog();
    const auto info = std::find_if(catalog.begin(), catalog.end(), [&](const FormulaInfo& f) { return f.name == name; });
    if (info == catalog.end()) throw DomainError("unknown formula '" + name + "'");
    for (const auto& [key, value] : params)
        if (std::find(info->params.begin(), info->params.end(), key) == info->params.end())
            throw DomainError("formula '" + name + "' takes no parameter '" + key + "'");
    auto i = [&](const char* p) { return integer(params, p); };
    auto q = [&](const char* p) { return param(params, p); };
    if (name == "lambda-complete") return lambda_complete(i("r"), i("m"));
    if (name == "lambda-complete-graph") return lambda_complete_graph(i("t"));
    if (name == "falling-factorial") return falling_factorial(i("m"), i("r"));
    if (name == "turan-count") return turan_edges(i("r"), i("m"), i("n"));
    if (name == "density-matching3") return density_matching3(i("t"));
    if (name == "density-star3") return density_star3(i("t"));
    if (name == "density-star4") return density_star4(i("t"));
    if (name == "bound-f-family") return bound_f_family(i("t"), i("l"), q("b"));
    if (name == "bound-star") return bound_star(q("b"));
    if (name == "bound-intersecting") return bound_intersecting(q("b"));
    if (name == "bound-almost-all-b") return bound_almost_all_b(i("t"), q("b"));
    if (name == "bound-matching3") return bound_matching3(i("t"), q("b"));
    return c1_rational_term(i("t"));
}

}  // namespace lagrangia
