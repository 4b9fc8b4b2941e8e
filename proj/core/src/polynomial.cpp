// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#include "detpoly/polynomial.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace detpoly {

Polynomial Polynomial::zero(ContextPtr ctx, const FieldSpec& spec) {
  return Polynomial(std::move(ctx), spec, {});
}

Polynomial Polynomial::constant(ContextPtr ctx, const FieldElement& value) {
  std::vector<Term> ts;
  if (!value.is_zero()) ts.push_back({Monomial(ctx->arity()), value});
  return Polynomial(std::move(ctx), value.spec(), std::move(ts));
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index, const FieldSpec& spec) {
  if (index >= ctx->arity()) throw DomainError("variable index out of range");
  Monomial m(ctx->arity());
  m = m.with_exponent(index, 1);
  std::vector<Term> ts{{std::move(m), FieldElement::one(spec)}};
  return Polynomial(std::move(ctx), spec, std::move(ts));
}

Polynomial Polynomial::from_terms(ContextPtr ctx, const FieldSpec& spec,
                                  std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (!(t.coeff.spec() == spec)) throw MixedFieldError();
    if (t.mono.arity() != ctx->arity()) throw ContextMismatch("monomial arity mismatch");
  }
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ctx->compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = merged.back().coeff + t.coeff;
      if (merged.back().coeff.is_zero()) merged.pop_back();
    } else if (!t.coeff.is_zero()) {
      merged.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(ctx), spec, std::move(merged));
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_constant() && terms_[0].coeff.is_one();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ctx_, spec_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

FieldElement Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_constant()) return terms_.back().coeff;
  return FieldElement::zero(spec_);
}

std::optional<std::uint32_t> Polynomial::degree_in(std::size_t var) const {
  if (var >= ctx_->arity()) throw UnknownVariable("#" + std::to_string(var), 0, 0);
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

std::optional<std::uint64_t> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Polynomial::depends_on(std::size_t var) const {
  for (const Term& t : terms_) {
    if (t.mono.exponent(var) != 0) return true;
  }
  return false;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) ts.push_back({t.mono, -t.coeff});
  return Polynomial(ctx_, spec_, std::move(ts));
}

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.context(), b.context());
  if (!(a.field() == b.field())) throw MixedFieldError();
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  // Merge of two strictly decreasing term lists.
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  const auto& ctx = *a.ctx_;
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = ctx.compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      out.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      FieldElement s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!s.is_zero()) out.push_back({a.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  return Polynomial(a.ctx_, a.spec_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ctx_, a.spec_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      prod.push_back({s.mono.times(t.mono), s.coeff * t.coeff});
    }
  }
  return Polynomial::from_terms(a.ctx_, a.spec_, std::move(prod));
}

Polynomial operator*(const Polynomial& a, const FieldElement& c) {
  if (!(a.field() == c.spec())) throw MixedFieldError();
  if (c.is_zero()) return Polynomial::zero(a.ctx_, a.spec_);
  std::vector<Term> ts;
  ts.reserve(a.terms_.size());
  for (const Term& t : a.terms_) ts.push_back({t.mono, t.coeff * c});
  return Polynomial(a.ctx_, a.spec_, std::move(ts));
}

Polynomial Polynomial::multiplied_by_term(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return zero(ctx_, spec_);
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) ts.push_back({t.mono.times(m), t.coeff * c});
  return Polynomial(ctx_, spec_, std::move(ts));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial acc = constant(ctx_, FieldElement::one(spec_));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  return *this * leading_coefficient().inverse();
}

bool Polynomial::in_canonical_form() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (t.coeff.is_zero() || !t.coeff.in_canonical_form()) return false;
    if (!(t.coeff.spec() == spec_)) return false;
    if (t.mono.arity() != ctx_->arity()) return false;
    if (i + 1 < terms_.size() && ctx_->compare(t.mono, terms_[i + 1].mono) <= 0) {
      return false;
    }
  }
  return true;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_context(a.ctx_, b.ctx_) || !(a.spec_ == b.spec_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
  require_same_context(p.context(), q.context());
  if (!(p.field() == q.field())) throw MixedFieldError();
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial quotient = Polynomial::zero(p.context(), p.field());
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!q.leading_monomial().divides(lt.mono)) return std::nullopt;
    Monomial m = lt.mono.quotient_by(q.leading_monomial());
    FieldElement c = lt.coeff / q.leading_coefficient();
    Polynomial piece = Polynomial::from_terms(p.context(), p.field(), {{m, c}});
    quotient = quotient + piece;
    rest = rest - q.multiplied_by_term(m, c);
  }
  if (!(quotient * q == p)) return std::nullopt;
  return quotient;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.context()->arity()) {
    throw UnknownVariable("#" + std::to_string(var), 0, 0);
  }
  std::vector<Term> ts;
  for (const Term& t : p.terms()) {
    std::uint32_t e = t.mono.exponent(var);
    if (e == 0) continue;
    FieldElement c = t.coeff * FieldElement::integer(p.field(), static_cast<long long>(e));
    if (c.is_zero()) continue;
    ts.push_back({t.mono.with_exponent(var, e - 1), std::move(c)});
  }
  return Polynomial::from_terms(p.context(), p.field(), std::move(ts));
}

namespace {

// Horner evaluation of the grouped terms, one substituted variable at a time.
Polynomial compose_rec(const std::vector<Term>& terms, std::size_t var,
                       const std::vector<Polynomial>& fs, const ContextPtr& target,
                       const FieldSpec& spec) {
  if (var == fs.size()) {
    FieldElement sum = FieldElement::zero(spec);
    for (const Term& t : terms) sum = sum + t.coeff;
    return Polynomial::constant(target, sum);
  }
  std::map<std::uint32_t, std::vector<Term>, std::greater<>> buckets;
  for (const Term& t : terms) {
    std::uint32_t e = t.mono.exponent(var);
    buckets[e].push_back({t.mono.with_exponent(var, 0), t.coeff});
  }
  Polynomial acc = Polynomial::zero(target, spec);
  std::optional<std::uint32_t> prev;
  for (const auto& [e, bucket] : buckets) {
    if (prev) acc = acc * fs[var].pow(*prev - e);
    acc = acc + compose_rec(bucket, var + 1, fs, target, spec);
    prev = e;
  }
  if (prev && *prev > 0) acc = acc * fs[var].pow(*prev);
  return acc;
}

}  // namespace

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& fs) {
  if (fs.empty() || p.context()->arity() != fs.size()) {
    throw ArityMismatch("composition arity does not match the component count");
  }
  for (const Polynomial& f : fs) {
    require_same_context(fs.front().context(), f.context());
    if (!(f.field() == p.field())) throw MixedFieldError();
  }
  const ContextPtr& target = fs.front().context();
  if (p.is_zero()) return Polynomial::zero(target, p.field());
  return compose_rec(p.terms(), 0, fs, target, p.field());
}

FieldElement evaluate(const Polynomial& p, const std::vector<FieldElement>& point) {
  if (point.size() != p.context()->arity()) {
    throw ArityMismatch("evaluation point arity mismatch");
  }
  for (const FieldElement& c : point) {
    if (!(c.spec() == p.field())) throw MixedFieldError();
  }
  FieldElement acc = FieldElement::zero(p.field());
  for (const Term& t : p.terms()) {
    FieldElement v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e != 0) v = v * point[i].pow(e);
    }
    acc = acc + v;
  }
  return acc;
}

Polynomial coefficient_in(const Polynomial& p, std::size_t var, std::uint32_t power) {
  std::vector<Term> ts;
  for (const Term& t : p.terms()) {
    if (t.mono.exponent(var) == power) {
      ts.push_back({t.mono.with_exponent(var, 0), t.coeff});
    }
  }
  return Polynomial::from_terms(p.context(), p.field(), std::move(ts));
}

namespace {

// One fraction-free elimination pass; entries stay in the polynomial ring.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m,
                               const ContextPtr& ctx, const FieldSpec& spec) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ctx, FieldElement::one(spec));
  Polynomial prev = Polynomial::constant(ctx, FieldElement::one(spec));
  FieldElement sign = FieldElement::one(spec);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Polynomial::zero(ctx, spec);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw Error("fraction-free elimination lost divisibility");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial::zero(ctx, spec);
    }
    prev = m[k][k];
    if (prev.is_zero()) return Polynomial::zero(ctx, spec);
  }
  return m[n - 1][n - 1] * sign;
}

}  // namespace

Polynomial resultant_wrt(const Polynomial& p, const Polynomial& q, std::size_t var,
                         std::uint32_t d, std::uint32_t e) {
  require_same_context(p.context(), q.context());
  if (!(p.field() == q.field())) throw MixedFieldError();
  auto dp = p.degree_in(var);
  auto dq = q.degree_in(var);
  if (!dp || *dp == 0 || !dq || *dq == 0) {
    throw DegreeZero("resultant requires both arguments to have positive degree in the variable");
  }
  if (*dp != d || *dq != e) {
    throw DomainError("declared resultant degrees do not match the actual degrees");
  }
  const ContextPtr& ctx = p.context();
  const FieldSpec& spec = p.field();
  const std::size_t size = static_cast<std::size_t>(d) + e;
  std::vector<std::vector<Polynomial>> sylvester(
      size, std::vector<Polynomial>(size, Polynomial::zero(ctx, spec)));
  for (std::uint32_t row = 0; row < e; ++row) {
    for (std::uint32_t k = 0; k <= d; ++k) {
      sylvester[row][row + k] = coefficient_in(p, var, d - k);
    }
  }
  for (std::uint32_t row = 0; row < d; ++row) {
    for (std::uint32_t k = 0; k <= e; ++k) {
      sylvester[e + row][row + k] = coefficient_in(q, var, e - k);
    }
  }
  return bareiss_determinant(std::move(sylvester), ctx, spec);
}

std::optional<Polynomial> chi_power_decompose(const Polynomial& q, std::size_t var,
                                              std::uint64_t chi) {
  if (chi == 0) throw DomainError("chi must be positive");
  std::vector<Term> ts;
  ts.reserve(q.term_count());
  for (const Term& t : q.terms()) {
    std::uint64_t e = t.mono.exponent(var);
    if (e % chi != 0) return std::nullopt;
    ts.push_back({t.mono.with_exponent(var, static_cast<std::uint32_t>(e / chi)), t.coeff});
  }
  return Polynomial::from_terms(q.context(), q.field(), std::move(ts));
}

std::optional<Polynomial> chi_root(const Polynomial& g, std::uint64_t chi) {
  if (g.field().characteristic() == 0) throw CharacteristicZeroError();
  if (g.field().characteristic() != chi) {
    throw DomainError("chi must equal the field characteristic");
  }
  std::vector<Term> ts;
  ts.reserve(g.term_count());
  for (const Term& t : g.terms()) {
    Monomial m = t.mono;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      std::uint64_t e = m.exponent(i);
      if (e % chi != 0) return std::nullopt;
      m = m.with_exponent(i, static_cast<std::uint32_t>(e / chi));
    }
    ts.push_back({std::move(m), t.coeff.frobenius_root(1)});
  }
  return Polynomial::from_terms(g.context(), g.field(), std::move(ts));
}

Polynomial map_to_context(const Polynomial& p, ContextPtr target,
                          const std::vector<std::size_t>& var_map) {
  if (var_map.size() != p.context()->arity()) {
    throw ArityMismatch("variable map arity mismatch");
  }
  std::vector<Term> ts;
  ts.reserve(p.term_count());
  for (const Term& t : p.terms()) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (var_map[i] == kUnmappedVar) {
        throw DomainError("polynomial depends on a variable absent from the target context");
      }
      m = m.with_exponent(var_map[i], m.exponent(var_map[i]) + e);
    }
    ts.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(std::move(target), p.field(), std::move(ts));
}

}  // namespace detpoly
