// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DETPOLY_EXPR_HPP
#define DETPOLY_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "detpoly/polynomial.hpp"

namespace detpoly {

namespace ast {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit {
  mpz_class value;
};
struct FracLit {
  mpz_class num;
  mpz_class den;
};
struct VarRef {
  std::string name;
};
struct Neg {
  ExprPtr operand;
};
struct BinOp {
  char op;  // '+', '-', '*'
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Pow {
  ExprPtr base;
  std::uint32_t exponent;
};

struct Expr {
  std::size_t line = 1;
  std::size_t col = 1;
  std::variant<IntLit, FracLit, VarRef, Neg, BinOp, Pow> node;
};

}  // namespace ast

/// Grammar:
///   expr   := '-'? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nonneg-int)?
///   base   := literal | variable | '(' expr ')'
/// Literals are integers or fractions "a/b". '^' binds tighter than '*',
/// which binds tighter than '+'/'-'; unary minus binds looser than '^'.
ast::ExprPtr parse_expression(std::string_view text);

/// Resolve variables against ctx and fold into a canonical polynomial.
Polynomial lower(const ast::Expr& e, const ContextPtr& ctx, const FieldSpec& spec);

Polynomial parse(std::string_view text, const ContextPtr& ctx, const FieldSpec& spec);

/// Deterministic rendering in the context's monomial order; satisfies
/// parse(print(p)) == p.
std::string print(const Polynomial& p);

}  // namespace detpoly

#endif  // DETPOLY_EXPR_HPP
