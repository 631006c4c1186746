#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gkdim/varset.hpp"

namespace gkdim {

// Element of the free commutative monoid [X]: an exponent vector over a
// fixed variable count. The all-zero vector is the unit.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(int arity, int index, int exponent = 1);

  int arity() const { return static_cast<int>(exps_.size()); }
  int exponent(int index) const { return exps_[index]; }
  const std::vector<int>& exponents() const { return exps_; }

  // Total degree, sum of all exponents.
  long length() const;
  bool is_unit() const { return length() == 0; }
  int max_exponent() const;

  bool operator==(const Monomial&) const = default;
  // Structural order (for containers); not a monomial order.
  auto operator<=>(const Monomial& other) const {
    return exps_ <=> other.exps_;
  }

 private:
  std::vector<int> exps_;
};

Monomial mul(const Monomial& a, const Monomial& b);
// Quotient b/a when a | b, componentwise; empty otherwise.
std::optional<Monomial> divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

// "x1^2 x2"; the unit prints as "1".
std::string format_monomial(const Monomial& m, const VarSet& vars);

}  // namespace gkdim
