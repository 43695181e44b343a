#pragma once

// ASCII expression front end:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary | unary)*      juxtaposition multiplies
//   unary  := '-' unary | factor
//   factor := atom "'"* ['^' ['-'] int]
//   atom   := number | q | qb | zeta | i | generator | 'j'digit '(' expr ')' | '(' expr ')'
// Postfix ' is the adjoint. Negative powers and division need scalars.

#include <stdexcept>
#include <string>
#include <vector>

#include "suq2/algebra.hpp"

namespace suq2 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int column)
      : std::runtime_error(msg + " at column " + std::to_string(column)), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// Raw expansion of the expression over `p`; words are concatenated, not
/// normalized.
LinComb parse_raw(const std::string& text, const PresentationPtr& p);
Element parse_element(const std::string& text, const PresentationPtr& p);
/// Expression that must evaluate to a scalar (no generators).
Scalar parse_scalar(const std::string& text);

/// suq2, torus, uq2, suq2-tensor2, suq2-tensor3, suq2-flip (formal q).
PresentationPtr algebra_by_selector(const std::string& selector);
const std::vector<std::string>& algebra_selectors();

}  // namespace suq2
