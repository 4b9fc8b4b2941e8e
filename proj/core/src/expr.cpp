// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#include "detpoly/expr.hpp"

#include <cctype>
#include <sstream>

namespace detpoly {

namespace {

enum class TokKind { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    std::size_t line = line_, col = col_;
    if (pos_ >= text_.size()) return {TokKind::End, "", line, col};
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_]);
        advance();
      }
      return {TokKind::Int, std::move(digits), line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '#') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '#')) {
        name.push_back(text_[pos_]);
        advance();
      }
      return {TokKind::Ident, std::move(name), line, col};
    }
    advance();
    switch (c) {
      case '+': return {TokKind::Plus, "+", line, col};
      case '-': return {TokKind::Minus, "-", line, col};
      case '*': return {TokKind::Star, "*", line, col};
      case '^': return {TokKind::Caret, "^", line, col};
      case '/': return {TokKind::Slash, "/", line, col};
      case '(': return {TokKind::LParen, "(", line, col};
      case ')': return {TokKind::RParen, ")", line, col};
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

constexpr std::uint32_t kMaxExponent = 100000;

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  ast::ExprPtr parse() {
    ast::ExprPtr e = expression();
    if (cur_.kind != TokKind::End) {
      throw SyntaxError("unexpected trailing input '" + cur_.text + "'", cur_.line, cur_.col);
    }
    return e;
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  static ast::ExprPtr node(std::size_t line, std::size_t col,
                           std::variant<ast::IntLit, ast::FracLit, ast::VarRef, ast::Neg,
                                        ast::BinOp, ast::Pow>
                               v) {
    auto e = std::make_unique<ast::Expr>();
    e->line = line;
    e->col = col;
    e->node = std::move(v);
    return e;
  }

  ast::ExprPtr expression() {
    std::size_t line = cur_.line, col = cur_.col;
    bool negate = false;
    if (cur_.kind == TokKind::Minus) {
      negate = true;
      shift();
    } else if (cur_.kind == TokKind::Plus) {
      shift();
    }
    ast::ExprPtr lhs = term();
    if (negate) lhs = node(line, col, ast::Neg{std::move(lhs)});
    while (cur_.kind == TokKind::Plus || cur_.kind == TokKind::Minus) {
      char op = cur_.kind == TokKind::Plus ? '+' : '-';
      std::size_t oline = cur_.line, ocol = cur_.col;
      shift();
      ast::ExprPtr rhs = term();
      lhs = node(oline, ocol, ast::BinOp{op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ast::ExprPtr term() {
    ast::ExprPtr lhs = factor();
    while (cur_.kind == TokKind::Star) {
      std::size_t oline = cur_.line, ocol = cur_.col;
      shift();
      ast::ExprPtr rhs = factor();
      lhs = node(oline, ocol, ast::BinOp{'*', std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ast::ExprPtr factor() {
    ast::ExprPtr b = base();
    if (cur_.kind == TokKind::Caret) {
      std::size_t eline = cur_.line, ecol = cur_.col;
      shift();
      if (cur_.kind == TokKind::Minus) {
        throw BadExponent("exponents must be nonnegative integers", cur_.line, cur_.col);
      }
      if (cur_.kind != TokKind::Int) {
        throw BadExponent("exponent must be an integer literal", cur_.line, cur_.col);
      }
      unsigned long long v = 0;
      for (char c : cur_.text) {
        v = v * 10 + static_cast<unsigned long long>(c - '0');
        if (v > kMaxExponent) {
          throw BadExponent("exponent out of range", cur_.line, cur_.col);
        }
      }
      shift();
      return node(eline, ecol, ast::Pow{std::move(b), static_cast<std::uint32_t>(v)});
    }
    return b;
  }

  ast::ExprPtr base() {
    std::size_t line = cur_.line, col = cur_.col;
    switch (cur_.kind) {
      case TokKind::Int: {
        mpz_class num(cur_.text);
        shift();
        if (cur_.kind == TokKind::Slash) {
          shift();
          if (cur_.kind != TokKind::Int) {
            throw SyntaxError("expected integer denominator", cur_.line, cur_.col);
          }
          mpz_class den(cur_.text);
          if (den == 0) throw SyntaxError("zero denominator", cur_.line, cur_.col);
          shift();
          return node(line, col, ast::FracLit{std::move(num), std::move(den)});
        }
        return node(line, col, ast::IntLit{std::move(num)});
      }
      case TokKind::Ident: {
        std::string name = cur_.text;
        shift();
        return node(line, col, ast::VarRef{std::move(name)});
      }
      case TokKind::LParen: {
        shift();
        ast::ExprPtr inner = expression();
        if (cur_.kind != TokKind::RParen) {
          throw SyntaxError("expected ')'", cur_.line, cur_.col);
        }
        shift();
        return inner;
      }
      default:
        throw SyntaxError("expected a literal, variable, or '('", line, col);
    }
  }

  Lexer lexer_;
  Token cur_{TokKind::End, "", 1, 1};
};

}  // namespace

ast::ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

Polynomial lower(const ast::Expr& e, const ContextPtr& ctx, const FieldSpec& spec) {
  return std::visit(
      [&](const auto& n) -> Polynomial {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::IntLit>) {
          return Polynomial::constant(ctx, FieldElement::integer(spec, n.value));
        } else if constexpr (std::is_same_v<T, ast::FracLit>) {
          return Polynomial::constant(ctx, FieldElement::fraction(spec, n.num, n.den));
        } else if constexpr (std::is_same_v<T, ast::VarRef>) {
          auto idx = ctx->index_of(n.name);
          if (!idx) throw UnknownVariable(n.name, e.line, e.col);
          return Polynomial::variable(ctx, *idx, spec);
        } else if constexpr (std::is_same_v<T, ast::Neg>) {
          return -lower(*n.operand, ctx, spec);
        } else if constexpr (std::is_same_v<T, ast::BinOp>) {
          Polynomial l = lower(*n.lhs, ctx, spec);
          Polynomial r = lower(*n.rhs, ctx, spec);
          switch (n.op) {
            case '+': return l + r;
            case '-': return l - r;
            default: return l * r;
          }
        } else {
          static_assert(std::is_same_v<T, ast::Pow>);
          return lower(*n.base, ctx, spec).pow(n.exponent);
        }
      },
      e.node);
}

Polynomial parse(std::string_view text, const ContextPtr& ctx, const FieldSpec& spec) {
  ast::ExprPtr e = parse_expression(text);
  return lower(*e, ctx, spec);
}

namespace {

void print_monomial(std::ostringstream& out, const Monomial& m, const VarContext& ctx,
                    bool leading_star) {
  bool first = !leading_star;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    std::uint32_t e = m.exponent(i);
    if (e == 0) continue;
    if (!first) out << '*';
    first = false;
    out << ctx.name(i);
    if (e > 1) out << '^' << e;
  }
}

}  // namespace

std::string print(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  const VarContext& ctx = *p.context();
  bool rat = p.field().is_rationals();
  bool first = true;
  for (const Term& t : p.terms()) {
    bool negative = rat && t.coeff.rational_value() < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    FieldElement mag = negative ? -t.coeff : t.coeff;
    if (t.mono.is_constant()) {
      out << mag.to_string();
    } else if (mag.is_one()) {
      print_monomial(out, t.mono, ctx, false);
    } else {
      out << mag.to_string();
      print_monomial(out, t.mono, ctx, true);
    }
  }
  return out.str();
}

}  // namespace detpoly
