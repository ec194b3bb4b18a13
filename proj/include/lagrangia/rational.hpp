#pragma once

#include <gmpxx.h>

#include <string>

namespace lagrangia {

using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Correctly rounded when numerator and denominator are exact doubles; get_d truncates.
inline double to_double(const Rational& q) {
    constexpr long limit = 1L << 53;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        const long num = q.get_num().get_si();
        const long den = q.get_den().get_si();
        if (num > -limit && num < limit && den < limit) return static_cast<double>(num) / static_cast<double>(den);
    }
    return q.get_d();
}
inline double to_double(double x) { return x; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "a/b", an integer, or a decimal literal such as "0.125" exactly.
Rational parse_rational(const std::string& text);

}  // namespace lagrangia
