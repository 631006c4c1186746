#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "gkdim/varset.hpp"

namespace gkdim {

// Fully parenthesized nonassociative word over X: a letter or an
// application of two terms. Immutable; copies share structure.
class BcTerm {
 public:
  static BcTerm letter(int index);
  static BcTerm app(BcTerm left, BcTerm right);

  bool is_letter() const;
  int letter_index() const;  // UsageError on applications
  const BcTerm& left() const;
  const BcTerm& right() const;

  // Number of letters, with repetition.
  int length() const;

 private:
  struct Node;
  explicit BcTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar: term := var | '(' term term ')'. Everything else (unknown
// variables, unbalanced parentheses, three unparenthesized factors) is a
// ParseError carrying the offending position.
BcTerm parse_term(std::string_view text, const VarSet& vars);

std::string format_term(const BcTerm& t, const VarSet& vars);

}  // namespace gkdim
