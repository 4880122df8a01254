#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "idealflow/errors.hpp"

namespace idealflow {

// Exact scalar domain. GMP keeps rationals canonical: lowest terms,
// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// The two scalar domains of the library. Operations never mix them;
// conversions are explicit (to_double / rational_from_double).
template <typename T>
concept ScalarDomain = std::same_as<T, Rational> || std::same_as<T, double>;

inline Rational abs_value(const Rational& x) { return abs(x); }
inline double abs_value(double x) { return x < 0 ? -x : x; }

template <ScalarDomain T>
T scalar_from_int(long v) {
    if constexpr (std::same_as<T, Rational>) {
        return Rational(v);
    } else {
        return static_cast<double>(v);
    }
}

double to_double(const Rational& x);

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

// Canonical text forms. Rationals print as "p/q", or "p" when q == 1.
// Doubles print as the shortest decimal that round-trips.
std::string format_scalar(const Rational& x);
std::string format_scalar(double x);

// Parse "p", "-p" or "p/q". Throws DomainError on anything else
// (including decimal points) or on a zero denominator.
Rational parse_rational(std::string_view token);

// Parse a decimal literal. Throws DomainError on trailing garbage or "/".
double parse_double(std::string_view token);

// lcm of |a| and |b|, used by the whole-number transform.
Integer lcm(const Integer& a, const Integer& b);

}  // namespace idealflow
