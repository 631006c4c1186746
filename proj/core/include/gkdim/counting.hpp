#pragma once

#include <vector>

#include "gkdim/rational.hpp"

namespace gkdim {

// C(n, k); zero for n < 0 or k < 0 or k > n.
BigInt binomial(long n, long k);

// Least d such that the d-th finite difference of seq is constant over its
// last `window` entries. Throws ResourceError when no degree stabilizes.
int finite_difference_degree(const std::vector<BigInt>& seq, int window);

}  // namespace gkdim
