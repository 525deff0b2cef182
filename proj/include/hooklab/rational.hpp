#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hooklab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(long long n) {
    Integer r = 1;
    for (long long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer integer_pow(Integer base, long long e) {
    Integer r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

/// num/den with the sign moved into the numerator (the backend insists on a
/// positive denominator).
inline Rational make_rational(Integer num, Integer den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// "p/q" with the denominator always spelled out, e.g. "3" -> "3/1".
inline std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// "p" for integral values, "p/q" otherwise. Used for series exponents.
inline std::string exponent_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Floor division and the matching non-negative remainder.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long mod_floor(long long a, long long b) { return a - b * floor_div(a, b); }

}  // namespace hooklab
