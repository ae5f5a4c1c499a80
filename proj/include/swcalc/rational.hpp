#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace swcalc {

/// Arbitrary-precision integer. Binomials such as binom(chi+2g-2, d) and
/// factorials up to a few hundred must stay exact, so fixed-width types are
/// out of the question.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backend after every operation.
using Rational = boost::multiprecision::cpp_rational;

/// Builds n/d in canonical form. Goes through an explicit division so the
/// result is normalized no matter how the operands are signed.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw argument_error("make_rational: zero denominator");
    Rational r(num);
    r /= Rational(den);
    return r;
}

inline bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

/// The integer value of r; throws if r is not an integer.
inline Integer to_integer(const Rational& r) {
    if (!is_integer(r))
        throw domain_error("to_integer: not an integer rational");
    return numerator(r);
}

/// n! as an exact integer.
inline Integer factorial(long n) {
    if (n < 0)
        throw argument_error("factorial: negative argument");
    Integer result = 1;
    for (long i = 2; i <= n; ++i)
        result *= i;
    return result;
}

/// Generalized binomial coefficient binom(n, m) = n(n-1)...(n-m+1) / m!,
/// defined for any integer n and m >= 0. This is the convention under which
/// the binomial theorem holds for negative exponents:
/// binom(-n, m) = (-1)^m binom(n+m-1, m).
/// The value is always an integer; it is returned as a Rational because that
/// is what the ring operations consume.
inline Rational binom(const Integer& n, long m) {
    if (m < 0)
        throw argument_error("binom: m must be non-negative");
    Integer num = 1;
    for (long i = 0; i < m; ++i)
        num *= (n - i);
    return make_rational(num, factorial(m));
}

inline Rational binom(long n, long m) {
    return binom(Integer(n), m);
}

/// b^e for e >= 0.
inline Integer ipow(const Integer& base, long e) {
    if (e < 0)
        throw argument_error("ipow: negative exponent");
    Integer result = 1;
    Integer b = base;
    long k = e;
    while (k > 0) {
        if (k & 1)
            result *= b;
        b *= b;
        k >>= 1;
    }
    return result;
}

/// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
inline std::string to_canonical(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline bool fits_int64(const Integer& n) {
    return n >= Integer(INT64_MIN) && n <= Integer(INT64_MAX);
}

} // namespace swcalc
