// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DETPOLY_IDEAL_HPP
#define DETPOLY_IDEAL_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "detpoly/polynomial.hpp"

namespace detpoly {

/// Number of reduction steps a single basis computation may spend before
/// aborting with ResourceExhausted.
inline constexpr std::uint64_t kDefaultGroebnerStepBudget = 1'000'000;
std::uint64_t groebner_step_budget() noexcept;
void set_groebner_step_budget(std::uint64_t budget) noexcept;

/// A polynomial ideal: generator list plus a lazily cached reduced Groebner
/// basis for the context's order. Immutable once constructed; the cache is
/// filled under a single-writer compute-then-publish discipline, so
/// concurrent read-only queries are safe.
class Ideal {
 public:
  /// The zero ideal is represented by the single generator 0.
  Ideal(ContextPtr ctx, const FieldSpec& spec, std::vector<Polynomial> generators);

  const ContextPtr& context() const noexcept { return ctx_; }
  const FieldSpec& field() const noexcept { return spec_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Reduced basis: monic elements, no term of any element divisible by
  /// another element's leading term, sorted ascending in the context order.
  /// Empty for the zero ideal. Deterministic and idempotent.
  const std::vector<Polynomial>& groebner_basis() const;

  bool is_zero_ideal() const { return groebner_basis().empty(); }
  bool contains_one() const;

  /// Remainder of multivariate division by the reduced basis; zero iff the
  /// polynomial lies in the ideal.
  Polynomial normal_form(const Polynomial& g) const;
  bool contains(const Polynomial& g) const { return normal_form(g).is_zero(); }

 private:
  friend Ideal with_cached_basis(ContextPtr ctx, const FieldSpec& spec,
                                 std::vector<Polynomial> generators,
                                 std::vector<Polynomial> basis);

  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Polynomial>> basis;
  };

  ContextPtr ctx_;
  FieldSpec spec_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Internal constructor for results whose reduced basis is already known.
Ideal with_cached_basis(ContextPtr ctx, const FieldSpec& spec,
                        std::vector<Polynomial> generators,
                        std::vector<Polynomial> basis);

/// Generators of I intersected with the subring on the kept variables,
/// via a block order eliminating the complement. The result context holds
/// the kept variables (original relative order) under grevlex.
Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& keep);

/// True iff some power of g lies in I, decided by testing whether
/// 1 lies in I + <z*g - 1> for a fresh variable z.
bool radical_membership(const Polynomial& g, const Ideal& I);

/// I : g^inf, computed by eliminating z from I + <z*g - 1>. g must be
/// nonzero.
Ideal saturation(const Ideal& I, const Polynomial& g);

/// I intersect J via a tag variable w: eliminate w from w*I + (1-w)*J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

/// Monic gcd computed as p*q / lcm, where <lcm> = <p> cap <q>.
Polynomial gcd_multivariate(const Polynomial& p, const Polynomial& q);

/// Dimension of the zero set: -1 for the unit ideal, otherwise the maximal
/// number of variables independent modulo the leading-term ideal of a
/// grevlex reduced basis (which equals the maximal size of a variable
/// subset whose elimination ideal is zero).
int dimension(const Ideal& I);

}  // namespace detpoly

#endif  // DETPOLY_IDEAL_HPP
