#pragma once

#include <compare>

#include "gkdim/monomial.hpp"

namespace gkdim {

// A monomial order on [X]: total, well-founded, multiplicative.
//
// deglex compares total degree first, then exponent vectors
// lexicographically from x_1 with the larger exponent on the earlier
// variable winning. lex drops the degree comparison.
struct ComOrder {
  enum class Kind { deglex, lex };
  Kind kind = Kind::deglex;
};

std::strong_ordering compare(const ComOrder& order, const Monomial& a,
                             const Monomial& b);
bool less(const ComOrder& order, const Monomial& a, const Monomial& b);

}  // namespace gkdim
