// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DETPOLY_POLYNOMIAL_HPP
#define DETPOLY_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "detpoly/context.hpp"
#include "detpoly/field.hpp"

namespace detpoly {

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/// Sparse multivariate polynomial: a term list kept strictly decreasing in
/// the context's monomial order, with no zero coefficients. The zero
/// polynomial is the empty list. Values are immutable and shareable.
class Polynomial {
 public:
  static Polynomial zero(ContextPtr ctx, const FieldSpec& spec);
  static Polynomial constant(ContextPtr ctx, const FieldElement& value);
  static Polynomial variable(ContextPtr ctx, std::size_t index, const FieldSpec& spec);
  /// Normalizes: sorts, merges equal monomials, drops zero coefficients.
  static Polynomial from_terms(ContextPtr ctx, const FieldSpec& spec,
                               std::vector<Term> terms);

  const ContextPtr& context() const noexcept { return ctx_; }
  const FieldSpec& field() const noexcept { return spec_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
  }
  bool is_one() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const FieldElement& leading_coefficient() const { return leading_term().coeff; }
  /// Everything below the leading term.
  Polynomial tail() const;

  FieldElement constant_term() const;

  /// Degree in one variable; nullopt for the zero polynomial (minus infinity).
  std::optional<std::uint32_t> degree_in(std::size_t var) const;
  std::optional<std::uint64_t> total_degree() const;
  bool depends_on(std::size_t var) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const FieldElement& c);

  Polynomial multiplied_by_term(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(std::uint64_t e) const;
  Polynomial monic() const;  // pre: nonzero

  /// Validator used by tests: strictly decreasing terms, canonical
  /// coefficients, no zeros, matching specs.
  bool in_canonical_form() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  Polynomial(ContextPtr ctx, FieldSpec spec, std::vector<Term> sorted_terms)
      : ctx_(std::move(ctx)), spec_(spec), terms_(std::move(sorted_terms)) {}

  ContextPtr ctx_;
  FieldSpec spec_;
  std::vector<Term> terms_;
};

/// Quotient p/q when q divides p in the full polynomial ring, else nullopt.
/// Implemented by repeated leading-term cancellation plus a verification
/// multiply. Throws DivisionByZero for q = 0.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q);

/// Formal partial derivative; exponents act through the coefficient field,
/// so in characteristic chi the derivative of v^chi is zero.
Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// p(f_1,...,f_m) for p over an m-variable context and components fs over a
/// common context, evaluated Horner-style one variable at a time.
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& fs);

FieldElement evaluate(const Polynomial& p, const std::vector<FieldElement>& point);

/// Coefficient of var^power in p, as a polynomial over the same context.
Polynomial coefficient_in(const Polynomial& p, std::size_t var, std::uint32_t power);

/// Resultant of p and q with respect to var, as the determinant of the
/// (d+e) x (d+e) Sylvester matrix of the declared degrees, computed by
/// fraction-free Bareiss elimination over the polynomial ring. The declared
/// degrees must match deg_var(p) and deg_var(q); both must be >= 1.
Polynomial resultant_wrt(const Polynomial& p, const Polynomial& q, std::size_t var,
                         std::uint32_t d, std::uint32_t e);

/// If every exponent of var in q is divisible by chi, the polynomial r with
/// q = r(..., var^chi); otherwise nullopt.
std::optional<Polynomial> chi_power_decompose(const Polynomial& q, std::size_t var,
                                              std::uint64_t chi);

/// The chi-th root h with h^chi = g over GF(chi), if one exists.
std::optional<Polynomial> chi_root(const Polynomial& g, std::uint64_t chi);

/// Transport p into `target`, sending variable i of p to variable
/// var_map[i] of target. Entries equal to kUnmappedVar assert that the
/// variable does not occur in p.
inline constexpr std::size_t kUnmappedVar = static_cast<std::size_t>(-1);
Polynomial map_to_context(const Polynomial& p, ContextPtr target,
                          const std::vector<std::size_t>& var_map);

}  // namespace detpoly

#endif  // DETPOLY_POLYNOMIAL_HPP
