#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace latcom {

using BigInt = boost::multiprecision::cpp_int;

/// Exact reduced fraction with positive denominator. All degree values in
/// this project are Rationals; equality is exact (13/16 vs 101/128 needs no
/// tolerance, and |Im f| counts distinct exact values).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational ratio(std::int64_t n, std::int64_t d) { return Rational(n, d); }
inline Rational ratio(const BigInt& n, const BigInt& d) { return Rational(n, d); }

inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

/// Parses "a/b" or "a". Throws std::runtime_error on malformed input or b = 0.
Rational parse_rational(std::string_view text);

} // namespace latcom
