#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padzeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// base^exp for any integer exponent; base must be nonzero when exp < 0.
inline Rational rpow(const Rational& base, std::int64_t exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rpow: zero to a negative power");
        return rpow(Rational(1) / base, -exp);
    }
    Rational result = 1;
    Rational b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

/// Exact "num/den" text; integers are still written with "/1" so the format is uniform.
inline std::string to_fraction_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed text or b == 0.
inline Rational parse_rational(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("malformed rational: '" + text + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("malformed rational: '" + text + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational: '" + text + "'");
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

} // namespace padzeta
