// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DETPOLY_CONTEXT_HPP
#define DETPOLY_CONTEXT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detpoly/errors.hpp"

namespace detpoly {

enum class OrderKind { Lex, Grevlex, Block };

/// Monomial order attached to a variable context. Block orders compare the
/// front block first and use grevlex within each block, which makes them
/// elimination orders for the front variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t block_split = 0;  // Block only: front block is [0, block_split)

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder block(std::size_t front_size) {
    return {OrderKind::Block, front_size};
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Exponent vector of fixed arity.
class Monomial {
 public:
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const;
  bool is_constant() const;
  bool divides(const Monomial& m) const;
  bool coprime_to(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  Monomial quotient_by(const Monomial& m) const;  // pre: m.divides(*this)
  Monomial with_exponent(std::size_t i, std::uint32_t e) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Ordered list of distinct variable names plus the designated monomial
/// order. Shared immutably between all polynomials over the same ring.
class VarContext {
 public:
  VarContext(std::vector<std::string> names, MonomialOrder order);

  std::size_t arity() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const MonomialOrder& order() const noexcept { return order_; }

  /// Three-way comparison in the context's monomial order:
  /// negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names,
                        MonomialOrder order = MonomialOrder::grevlex());

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextMismatch();
}

}  // namespace detpoly

#endif  // DETPOLY_CONTEXT_HPP
