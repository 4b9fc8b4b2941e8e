// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#include "detpoly/field.hpp"

#include <atomic>
#include <utility>

namespace detpoly {

namespace {

std::atomic<std::uint64_t> g_max_modulus{std::uint64_t{1} << 31};

bool is_prime_by_trial_division(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc;
}

// Inverse of a modulo p via extended Euclid; a must be nonzero mod p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DivisionByZero();
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t residue_of(const mpz_class& v, std::uint64_t p) {
  mpz_class m = v % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::Rationals, 0); }

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p > max_modulus()) {
    throw DomainError("modulus " + std::to_string(p) + " exceeds the configured cap");
  }
  if (!is_prime_by_trial_division(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(FieldKind::PrimeField, p);
}

std::uint64_t FieldSpec::modulus() const {
  if (kind_ != FieldKind::PrimeField) {
    throw DomainError("the rationals have no modulus");
  }
  return modulus_;
}

std::uint64_t FieldSpec::max_modulus() noexcept { return g_max_modulus.load(); }

void FieldSpec::set_max_modulus(std::uint64_t cap) noexcept { g_max_modulus.store(cap); }

std::string FieldSpec::to_string() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(modulus_) + ")";
}

FieldElement FieldElement::zero(const FieldSpec& spec) { return integer(spec, 0LL); }

FieldElement FieldElement::one(const FieldSpec& spec) { return integer(spec, 1LL); }

FieldElement FieldElement::integer(const FieldSpec& spec, long long value) {
  return integer(spec, mpz_class(static_cast<long>(value)));
}

FieldElement FieldElement::integer(const FieldSpec& spec, const mpz_class& value) {
  FieldElement e(spec);
  if (spec.is_rationals()) {
    e.rat_ = mpq_class(value);
  } else {
    e.res_ = residue_of(value, spec.modulus());
  }
  return e;
}

FieldElement FieldElement::fraction(const FieldSpec& spec, const mpz_class& num,
                                    const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  return integer(spec, num) / integer(spec, den);
}

bool FieldElement::is_zero() const {
  return spec_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
  return spec_.is_rationals() ? rat_ == 1 : res_ == 1 % spec_.modulus();
}

void FieldElement::require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec_ == b.spec_)) throw MixedFieldError();
}

FieldElement FieldElement::operator-() const {
  FieldElement r(spec_);
  if (spec_.is_rationals()) {
    r.rat_ = -rat_;
  } else {
    r.res_ = res_ == 0 ? 0 : spec_.modulus() - res_;
  }
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same(a, b);
  FieldElement r(a.spec_);
  if (a.spec_.is_rationals()) {
    r.rat_ = a.rat_ + b.rat_;
  } else {
    r.res_ = (a.res_ + b.res_) % a.spec_.modulus();
  }
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a + (-b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same(a, b);
  FieldElement r(a.spec_);
  if (a.spec_.is_rationals()) {
    r.rat_ = a.rat_ * b.rat_;
  } else {
    r.res_ = a.res_ * b.res_ % a.spec_.modulus();
  }
  return r;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same(a, b);
  return a * b.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  FieldElement r(spec_);
  if (spec_.is_rationals()) {
    r.rat_ = 1 / rat_;
  } else {
    r.res_ = mod_inverse(res_, spec_.modulus());
  }
  return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (spec_.is_rationals()) {
    FieldElement r(spec_);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), rat_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), rat_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    r.rat_ = mpq_class(num) / mpq_class(den);
    return r;
  }
  FieldElement r(spec_);
  r.res_ = mod_pow(res_, e, spec_.modulus());
  return r;
}

FieldElement FieldElement::frobenius_root(unsigned /*nu*/) const {
  if (spec_.characteristic() == 0) throw CharacteristicZeroError();
  // x -> x^chi is the identity on GF(p), so every chi^nu-th root is x itself.
  return *this;
}

bool FieldElement::in_canonical_form() const {
  if (spec_.is_rationals()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), rat_.get_num().get_mpz_t(), rat_.get_den().get_mpz_t());
    return rat_.get_den() > 0 && (g == 1 || (rat_.get_num() == 0 && rat_.get_den() == 1));
  }
  return res_ < spec_.modulus();
}

const mpq_class& FieldElement::rational_value() const {
  if (!spec_.is_rationals()) throw DomainError("not a rational value");
  return rat_;
}

std::uint64_t FieldElement::residue() const {
  if (spec_.is_rationals()) throw DomainError("not a prime-field residue");
  return res_;
}

std::string FieldElement::to_string() const {
  return spec_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec_ == b.spec_)) return false;
  return a.spec_.is_rationals() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

}  // namespace detpoly
