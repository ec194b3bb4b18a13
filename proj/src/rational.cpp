#include "lagrangia/rational.hpp"

#include <stdexcept>

namespace lagrangia {

Rational parse_rational(const std::string& text) {
    try {
        if (auto dot = text.find('.'); dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            const std::size_t decimals = text.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument(text);
            if (digits[0] == '+') digits.erase(0, 1);
            Rational q(mpz_class(digits, 10), mpz_class("1" + std::string(decimals, '0'), 10));
            q.canonicalize();
            return q;
        }
        Rational q(text, 10);
        if (q.get_den() == 0) throw std::invalid_argument(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

}  // namespace lagrangia
