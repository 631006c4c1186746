#pragma once

#include <vector>

#include "gkdim/com_order.hpp"
#include "gkdim/monomial.hpp"
#include "gkdim/rational.hpp"

namespace gkdim {

// u lies in Irr(S): no leading monomial divides u.
bool irr_member(const std::vector<Monomial>& leads, const Monomial& u);

// #{u in Irr(S) | l(u) <= n} by lattice enumeration with divisor pruning;
// subtrees free of candidate divisors are counted in closed form. budget
// caps the number of visited lattice nodes.
BigInt growth_count(const std::vector<Monomial>& leads, int arity, int n,
                    long budget = 50'000'000);

// Same count by inclusion-exclusion over the divisor set (throws
// ResourceError when the divisor antichain is too large to sweep).
BigInt irr_count(const std::vector<Monomial>& leads, int arity, int n);

// irr_count for every horizon 0..n_max.
std::vector<BigInt> irr_count_table(const std::vector<Monomial>& leads,
                                    int arity, int n_max);

std::vector<Monomial> list_irreducible(const std::vector<Monomial>& leads,
                                       int arity, int max_length,
                                       long budget = 10'000'000);

}  // namespace gkdim
