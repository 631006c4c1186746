#pragma once

#include <string>
#include <vector>

#include "gkdim/com_order.hpp"
#include "gkdim/monomial.hpp"
#include "gkdim/rational.hpp"

namespace gkdim {

struct ComTerm {
  Monomial mono;
  Rational coeff;
};

// Finite assignment of nonzero rational coefficients to monomials. Terms
// are kept sorted descending under the order supplied at construction, so
// the leading monomial is terms().front().
class ComPolynomial {
 public:
  ComPolynomial() = default;  // zero
  ComPolynomial(std::vector<ComTerm> terms, const ComOrder& order);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<ComTerm>& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  bool operator==(const ComPolynomial&) const = default;

 private:
  std::vector<ComTerm> terms_;
};

ComPolynomial add(const ComPolynomial& a, const ComPolynomial& b,
                  const ComOrder& order);
ComPolynomial sub(const ComPolynomial& a, const ComPolynomial& b,
                  const ComOrder& order);
ComPolynomial negate(const ComPolynomial& a);
ComPolynomial scale(const ComPolynomial& a, const Rational& c);
// Multiplying every term by one monomial preserves the term order.
ComPolynomial multiply_monomial(const ComPolynomial& a, const Monomial& m);
ComPolynomial make_monic(const ComPolynomial& a);

ComPolynomial monomial_polynomial(const Monomial& m);

std::string format_polynomial(const ComPolynomial& f, const VarSet& vars);

}  // namespace gkdim
