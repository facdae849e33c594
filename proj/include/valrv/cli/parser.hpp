#pragma once

// Textual grammar shared by command arguments and data files:
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := primary ('^' exponent)?
//   primary  := integer | 't' | 'pi' | 'u' | 'X' | 'O' '(' expr ')' | '(' expr ')'
//   exponent := '-'? integer | '(' '-'? integer ('/' integer)? ')'
//
// t^q needs q in the value group; pi^k, u^k, X^k and powers of compound
// expressions take integer exponents.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "valrv/newton.hpp"

namespace valrv::cli {

struct ExprAst {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow, BigO };

  Kind kind = Kind::Number;
  BigInt number;
  std::string symbol;
  Rational exponent;
  std::vector<ExprAst> children;
  std::size_t pos = 0;
};

ExprAst parse_expr(std::string_view src);

FieldElem parse_element(std::string_view src, const FieldSpec& spec);
/// Polynomial in X with coefficients in the field.
Poly parse_poly(std::string_view src, const FieldSpec& spec);
/// Residue-field constant such as "2*u+1".
ResidueElem parse_residue(std::string_view src, const ResidueFieldPtr& field);

}  // namespace valrv::cli
