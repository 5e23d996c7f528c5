#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace heis {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// No floating point appears anywhere in the algebra layer.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Canonical "num/den" form used by the JSON output (always includes the
// denominator, so fixed inputs serialize byte-identically).
inline std::string rational_repr(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Human-readable form: integers print bare, proper fractions as "a/b".
inline std::string rational_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace heis
