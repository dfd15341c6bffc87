#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace heunspectra {

// Arbitrary precision rational, always kept canonical by gmpxx.
using BigRat = mpq_class;

BigRat rat(long num, long den = 1);

// Exact binary value of a finite double.
BigRat rat_from_double(double v);

// Parses "p", "p/q" or a decimal literal such as "0.25" exactly.
BigRat parse_rat(const std::string& text);

// "num/den", denominator always printed.
std::string to_string(const BigRat& v);

double to_double(const BigRat& v);

// Square root when v is the square of a rational.
std::optional<BigRat> exact_sqrt(const BigRat& v);

}  // namespace heunspectra
