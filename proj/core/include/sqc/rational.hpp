#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "sqc/errors.hpp"

namespace sqc {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored gcd-reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Formats as "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q"; q must be nonzero. A negative q is folded into p.
inline Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_text = text.substr(0, slash);
    const std::string den_text = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (num_text.empty() || den_text.empty())
        throw parse_error("empty numerator or denominator in \"" + text + "\"");
    Int num, den;
    try {
        num = Int(num_text);
        den = Int(den_text);
    } catch (const std::runtime_error& e) {
        throw parse_error("bad rational \"" + text + "\": " + e.what());
    }
    if (den == 0) throw parse_error("zero denominator in \"" + text + "\"");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

} // namespace sqc
