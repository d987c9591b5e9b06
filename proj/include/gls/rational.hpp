// Exact rational arithmetic used throughout the library.
//
// Every measure, threshold and ordering key is an arbitrary-precision
// rational; all comparisons against thresholds are exact. Floating point
// only enters through the explicit log-space helpers below.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gls {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Natural log of a positive big integer, accurate to ~1 ulp even when the
// value does not fit in a double.
inline double log_big(const BigInt& n) {
    if (n <= 0) throw std::domain_error("log_big: argument must be positive");
    const unsigned bits = msb(n);
    if (bits < 900) return std::log(n.convert_to<double>());
    const unsigned shift = bits - 900;
    const BigInt top = n >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2_v<double>;
}

inline double log_rational(const Rational& q) {
    if (q <= 0) throw std::domain_error("log_rational: argument must be positive");
    return log_big(numerator(q)) - log_big(denominator(q));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Parses "p", "p/q" or "p^-k" style strings ("2^-13" -> 1/8192).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace gls
