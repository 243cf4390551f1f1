#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "halltab/errors.hpp"

namespace halltab {

/** Arbitrary-precision signed integer used for every count in the library.
 *  No counting path ever touches floating point. */
using bigint = boost::multiprecision::cpp_int;

/** Exact rational with canonical representation (coprime parts, positive
 *  denominator) maintained by the backend on every operation. */
using exact_rational = boost::multiprecision::cpp_rational;

/** Numerator of a canonical rational. */
inline bigint rational_num(const exact_rational& r) {
    return boost::multiprecision::numerator(r);
}

/** Denominator of a canonical rational (always positive). */
inline bigint rational_den(const exact_rational& r) {
    return boost::multiprecision::denominator(r);
}

/** n! as a bigint. */
inline bigint factorial(int n) {
    if (n < 0) throw invalid_input("factorial: negative argument");
    bigint out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

/** Binomial coefficient C(n, k) as a bigint (0 when k is out of range). */
inline bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    bigint out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i; // exact at every step: out is C(n-k+i, i)
    }
    return out;
}

} // namespace halltab
