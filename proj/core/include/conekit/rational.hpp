#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace conekit {

// Exact arithmetic backbone of the library.  All closed-form spectral data
// (eigenvalues, stability margins, polynomial coefficients) is kept rational
// until it crosses an I/O or quadrature boundary.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& x);

// Exact square root when x is the square of a rational, nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& x);

// x^k for integer k (k < 0 requires x != 0).
Rational rational_pow(const Rational& x, long k);

// "7", "-3/4" -- denominator-free form when the value is an integer.
std::string format_rational(const Rational& x);

// Accepts "a", "a/b" and plain decimal strings such as "2.5" or "-0.125".
Rational parse_rational(const std::string& text);

// Exact dyadic value of a finite double.
Rational rational_from_double(double x);

// Binomial coefficient, exact.
BigInt binomial(unsigned n, unsigned k);

}  // namespace conekit
