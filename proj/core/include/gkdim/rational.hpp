#pragma once

#include <gmpxx.h>

#include <string>

namespace gkdim {

// Exact arithmetic throughout: coefficients are arbitrary-precision
// rationals, growth counts are arbitrary-precision integers.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "n" or "n/d" with an optional leading sign; result is canonical.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

}  // namespace gkdim
