#pragma once

#include <optional>
#include <vector>

#include "gkdim/com_irr.hpp"
#include "gkdim/com_polynomial.hpp"

namespace gkdim {

struct GkReportCom {
  int c_s = 0;
  int gk = 0;
  std::optional<Monomial> witness;  // irreducible, Sd(witness) == gk
  long candidate_count = 0;         // box candidates examined
};

// Least n with every leading monomial dividing x_1^n...x_r^n; 0 for the
// empty set. Closed form: max over the set of the maximum exponent.
int c_constant(const std::vector<Monomial>& leads);
// Linear scan over n = 0, 1, ...; cross-check for the closed form.
int c_constant_scan(const std::vector<Monomial>& leads, int arity);

// Number of exponents strictly greater than c.
int sd_value(const Monomial& u, int c);

// GK dimension from the finite candidate box: max Sd over the monomials
// with each exponent in {0, C_S+1} that stay irreducible. Subsets are
// visited by decreasing cardinality, index-lexicographically within one
// cardinality, stopping at the first irreducible hit.
GkReportCom gk_fast(const std::vector<Monomial>& leads, int arity);
GkReportCom gk_fast(const std::vector<ComPolynomial>& basis, int arity);

// Brute force over the full box {0,...,C_S+1}^r: max Sd over Irr(S).
int gk_box_oracle(const std::vector<Monomial>& leads, int arity);

// Incremental update after adjoining one monomial relation: the dimension
// drops by one exactly when no size-gk candidate box monomial survives.
// Requires a nonempty monomial set and report.gk >= 1.
GkReportCom gk_after_adding(const std::vector<Monomial>& mono_set,
                            const Monomial& added, const GkReportCom& report);

// Eventual-polynomial degree of n -> growth_count(S, n), fitted by finite
// differences with the last ceil(n_max/4) entries required constant.
int growth_degree(const std::vector<Monomial>& leads, int arity,
                  int n_max = 40, long budget = 50'000'000);

}  // namespace gkdim
