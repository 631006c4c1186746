#pragma once

#include <vector>

#include "gkdim/com_reduce.hpp"

namespace gkdim {

// lcm/lm(f)*f - lcm/lm(g)*g for monic f, g.
ComPolynomial s_polynomial(const ComPolynomial& f, const ComPolynomial& g,
                           const ComOrder& order);

// Buchberger completion with the normal pair-selection strategy (pairs by
// increasing lcm under the order). Zero generators are discarded, the rest
// scaled monic. Returns the reduced Groebner basis sorted ascending by
// leading monomial; throws ResourceError past max_steps S-pair reductions.
std::vector<ComPolynomial> buchberger(const std::vector<ComPolynomial>& gens,
                                      const ComOrder& order,
                                      long max_steps = 100000);

// Subset of a Groebner basis whose leading monomials form a divisibility
// antichain; irreducible monomials are unchanged.
std::vector<ComPolynomial> minimal_gb(const std::vector<ComPolynomial>& basis,
                                      const ComOrder& order);

std::vector<Monomial> leading_monomials(const std::vector<ComPolynomial>& fs);

}  // namespace gkdim
