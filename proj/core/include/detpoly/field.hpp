// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DETPOLY_FIELD_HPP
#define DETPOLY_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "detpoly/errors.hpp"

namespace detpoly {

enum class FieldKind { Rationals, PrimeField };

/// Which exact coefficient field the kernel computes over: the rationals or
/// a prime field GF(p). Carries the characteristic (0 or p).
class FieldSpec {
 public:
  static FieldSpec rationals();

  /// p must be prime (checked by trial division) and below max_modulus().
  static FieldSpec prime_field(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == FieldKind::Rationals; }
  std::uint64_t modulus() const;
  std::uint64_t characteristic() const noexcept {
    return kind_ == FieldKind::Rationals ? 0 : modulus_;
  }

  static std::uint64_t max_modulus() noexcept;
  static void set_max_modulus(std::uint64_t cap) noexcept;

  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldSpec(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;  // 0 for the rationals
};

/// An exact scalar: a canonical fraction over the rationals, or a reduced
/// residue in [0, p) over GF(p). Immutable; all operations are pure.
class FieldElement {
 public:
  static FieldElement zero(const FieldSpec& spec);
  static FieldElement one(const FieldSpec& spec);
  static FieldElement integer(const FieldSpec& spec, long long value);
  static FieldElement integer(const FieldSpec& spec, const mpz_class& value);
  /// num/den in the field; den must be invertible.
  static FieldElement fraction(const FieldSpec& spec, const mpz_class& num,
                               const mpz_class& den);

  const FieldSpec& spec() const noexcept { return spec_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  /// The chi^nu-th root in positive characteristic. On a prime field the
  /// Frobenius is the identity, so this returns the element itself.
  FieldElement frobenius_root(unsigned nu) const;

  /// Canonical-form check used by the test validators.
  bool in_canonical_form() const;

  const mpq_class& rational_value() const;
  std::uint64_t residue() const;

  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  explicit FieldElement(const FieldSpec& spec) : spec_(spec) {}

  static void require_same(const FieldElement& a, const FieldElement& b);

  FieldSpec spec_;
  mpq_class rat_;           // Rationals only
  std::uint64_t res_ = 0;   // PrimeField only
};

}  // namespace detpoly

#endif  // DETPOLY_FIELD_HPP
