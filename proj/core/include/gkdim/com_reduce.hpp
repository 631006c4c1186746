#pragma once

#include <cstddef>
#include <vector>

#include "gkdim/com_polynomial.hpp"

namespace gkdim {

// One recorded division step: the input lost coeff * (quotient * divisor).
struct ComReductionStep {
  std::size_t divisor_index;
  Monomial quotient;
  Rational coeff;
};

// remainder + sum of the recorded steps reconstructs the input exactly.
struct ComReduction {
  ComPolynomial remainder;
  std::vector<ComReductionStep> steps;
};

// Division with remainder by a monic set. With tail=false only the leading
// monomial is rewritten until it is irreducible; with tail=true the
// remainder is supported entirely outside the leading-term ideal.
ComReduction reduce(const ComPolynomial& f,
                    const std::vector<ComPolynomial>& divisors,
                    const ComOrder& order, bool tail);

}  // namespace gkdim
