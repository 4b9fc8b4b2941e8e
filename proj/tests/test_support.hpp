// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DETPOLY_TEST_SUPPORT_HPP
#define DETPOLY_TEST_SUPPORT_HPP

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "detpoly/detcore.hpp"
#include "detpoly/expr.hpp"
#include "detpoly/ideal.hpp"

namespace detpoly::testing {

inline FieldSpec rationals() { return FieldSpec::rationals(); }

inline ContextPtr ctx(std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex()) {
  return make_context(std::move(names), order);
}

inline Polynomial P(const std::string& text, const ContextPtr& c, const FieldSpec& s) {
  return parse(text, c, s);
}

inline FieldElement random_element(std::mt19937_64& rng, const FieldSpec& spec) {
  if (spec.is_rationals()) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    return FieldElement::fraction(spec, mpz_class(static_cast<long>(num(rng))),
                                  mpz_class(static_cast<long>(den(rng))));
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, spec.modulus() - 1);
  return FieldElement::integer(spec, static_cast<long long>(pick(rng)));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const ContextPtr& c,
                                    const FieldSpec& spec, std::size_t max_terms,
                                    std::uint32_t max_exp) {
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
  std::vector<Term> terms;
  std::size_t k = nterms(rng);
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<std::uint32_t> exps(c->arity());
    for (auto& e : exps) e = exp(rng);
    terms.push_back({Monomial(std::move(exps)), random_element(rng, spec)});
  }
  return Polynomial::from_terms(c, spec, std::move(terms));
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, const ContextPtr& c,
                                            const FieldSpec& spec, std::size_t max_terms,
                                            std::uint32_t max_exp) {
  for (;;) {
    Polynomial p = random_polynomial(rng, c, spec, max_terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

// Cofactor-expansion determinant, the independent oracle for the
// Bareiss-based resultant.
inline Polynomial naive_determinant(const std::vector<std::vector<Polynomial>>& m,
                                    const ContextPtr& c, const FieldSpec& spec) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(c, FieldElement::one(spec));
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(c, spec);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * naive_determinant(minor, c, spec);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Sylvester matrix built independently of the kernel's resultant path.
inline std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p,
                                                             const Polynomial& q,
                                                             std::size_t var,
                                                             std::uint32_t d,
                                                             std::uint32_t e) {
  const ContextPtr& c = p.context();
  const FieldSpec& spec = p.field();
  std::size_t n = d + e;
  std::vector<std::vector<Polynomial>> m(n,
                                         std::vector<Polynomial>(n, Polynomial::zero(c, spec)));
  for (std::uint32_t row = 0; row < e; ++row) {
    for (std::uint32_t k = 0; k <= d; ++k) {
      m[row][row + k] = coefficient_in(p, var, d - k);
    }
  }
  for (std::uint32_t row = 0; row < d; ++row) {
    for (std::uint32_t k = 0; k <= e; ++k) {
      m[e + row][row + k] = coefficient_in(q, var, e - k);
    }
  }
  return m;
}

// The subset definition of dimension, used as the oracle for the
// leading-term fast path.
inline int dimension_by_subsets(const Ideal& I) {
  if (I.contains_one()) return -1;
  const std::size_t n = I.context()->arity();
  for (std::size_t size = n + 1; size-- > 0;) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::vector<std::size_t> keep;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask & (std::uint32_t{1} << v)) keep.push_back(v);
      }
      if (elimination_ideal(I, keep).is_zero_ideal()) return static_cast<int>(size);
    }
  }
  return -1;
}

// Literal power search g, g^2, ..., g^cap in I.
inline bool radical_by_power_search(const Polynomial& g, const Ideal& I, unsigned cap = 8) {
  Polynomial power = g;
  for (unsigned k = 1; k <= cap; ++k) {
    if (I.contains(power)) return true;
    power = power * g;
  }
  return false;
}

// Division with recorded cofactors: g = sum q_i b_i + r, r the normal form.
struct DivisionTrace {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

inline DivisionTrace divide_with_cofactors(const Polynomial& g,
                                           const std::vector<Polynomial>& basis) {
  DivisionTrace trace{std::vector<Polynomial>(basis.size(),
                                              Polynomial::zero(g.context(), g.field())),
                      Polynomial::zero(g.context(), g.field())};
  Polynomial work = g;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero() || !basis[i].leading_monomial().divides(lt.mono)) continue;
      Monomial m = lt.mono.quotient_by(basis[i].leading_monomial());
      FieldElement c = lt.coeff / basis[i].leading_coefficient();
      trace.quotients[i] =
          trace.quotients[i] + Polynomial::from_terms(g.context(), g.field(), {{m, c}});
      work = work - basis[i].multiplied_by_term(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      trace.remainder =
          trace.remainder + Polynomial::from_terms(g.context(), g.field(), {{lt.mono, lt.coeff}});
      work = work.tail();
    }
  }
  return trace;
}

// Exhaustive search of GF(p)^n for a pair of points the map glues but the
// polynomial separates.
struct GridViolation {
  std::vector<FieldElement> a;
  std::vector<FieldElement> b;
};

inline std::optional<GridViolation> grid_search_violation(const PolyMap& f,
                                                          const Polynomial& g) {
  const FieldSpec& spec = f.field();
  const std::uint64_t p = spec.modulus();
  const std::size_t n = f.domain_arity();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::map<std::vector<std::uint64_t>, std::pair<std::vector<FieldElement>, std::uint64_t>>
      classes;
  std::vector<std::uint64_t> digits(n, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::vector<FieldElement> point;
    point.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      point.push_back(FieldElement::integer(spec, static_cast<long long>(digits[i])));
    }
    std::vector<std::uint64_t> key;
    key.reserve(f.codomain_arity());
    for (const Polynomial& comp : f.components()) {
      key.push_back(evaluate(comp, point).residue());
    }
    std::uint64_t gval = evaluate(g, point).residue();
    auto [it, inserted] = classes.try_emplace(std::move(key), point, gval);
    if (!inserted && it->second.second != gval) {
      return GridViolation{it->second.first, point};
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace detpoly::testing

#endif  // DETPOLY_TEST_SUPPORT_HPP
