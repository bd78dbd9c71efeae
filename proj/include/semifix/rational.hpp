#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace semifix {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we require: lowest terms, denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

// Greatest integer not exceeding q.
inline BigInt rat_floor(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt quot = n / d;
    if (n % d != 0 && n < 0) --quot;
    return quot;
}

inline bool rat_is_integer(const Rational& q) { return denominator(q) == 1; }

// Every finite double is a dyadic rational; this conversion is exact.
inline Rational rat_from_double(double x) { return Rational(x); }

inline double rat_to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string rat_to_string(const Rational& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

} // namespace semifix
