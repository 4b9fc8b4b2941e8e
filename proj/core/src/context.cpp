// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#include "detpoly/context.hpp"

#include <algorithm>
#include <unordered_set>

namespace detpoly {

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_constant() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > m.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime_to(const Monomial& m) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && m.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += m.exps_[i];
  return r;
}

Monomial Monomial::quotient_by(const Monomial& m) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= m.exps_[i];
  return r;
}

Monomial Monomial::with_exponent(std::size_t i, std::uint32_t e) const {
  Monomial r = *this;
  r.exps_[i] = e;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  return r;
}

VarContext::VarContext(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("variable names must be nonempty");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  if (order_.kind == OrderKind::Block && order_.block_split > names_.size()) {
    throw DomainError("block split exceeds arity");
  }
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

namespace {

int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
  }
  return 0;
}

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace

int VarContext::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = arity();
  switch (order_.kind) {
    case OrderKind::Lex:
      return lex_range(a, b, 0, n);
    case OrderKind::Grevlex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::Block: {
      if (int r = grevlex_range(a, b, 0, order_.block_split); r != 0) return r;
      return grevlex_range(a, b, order_.block_split, n);
    }
  }
  return 0;
}

ContextPtr make_context(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<VarContext>(std::move(names), order);
}

}  // namespace detpoly
