// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DETPOLY_ERRORS_HPP
#define DETPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detpoly {

/// Base class of everything thrown by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition or domain restriction.
class DomainError : public Error {
 public:
  using Error::Error;
};

class MixedFieldError : public DomainError {
 public:
  MixedFieldError() : DomainError("operands live in different fields") {}
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : DomainError(what) {}
};

class CharacteristicZeroError : public DomainError {
 public:
  CharacteristicZeroError()
      : DomainError("operation requires positive characteristic") {}
};

class ContextMismatch : public DomainError {
 public:
  ContextMismatch() : DomainError("polynomials belong to different variable contexts") {}
  explicit ContextMismatch(const std::string& what) : DomainError(what) {}
};

class ArityMismatch : public DomainError {
 public:
  explicit ArityMismatch(const std::string& what) : DomainError(what) {}
};

/// Degenerate map shape (empty component list, zero domain variables).
class ArityError : public DomainError {
 public:
  explicit ArityError(const std::string& what) : DomainError(what) {}
};

class DegreeZero : public DomainError {
 public:
  explicit DegreeZero(const std::string& what) : DomainError(what) {}
};

class BothZero : public DomainError {
 public:
  BothZero() : DomainError("gcd of two zero polynomials is undefined") {}
};

/// The eliminated closure ideal was expected to be principal of height one.
class NotPrincipal : public DomainError {
 public:
  explicit NotPrincipal(const std::string& what) : DomainError(what) {}
};

/// The attached polynomial is transcendental over the image coordinates:
/// the closure ideal came out zero.
class TranscendentalOverImage : public DomainError {
 public:
  TranscendentalOverImage()
      : DomainError("polynomial is algebraically independent of the map components") {}
};

class HypothesisNotVerified : public DomainError {
 public:
  explicit HypothesisNotVerified(const std::string& what) : DomainError(what) {}
};

class NotDetermined : public DomainError {
 public:
  NotDetermined() : DomainError("polynomial is not determined by the map") {}
};

class PreconditionViolated : public DomainError {
 public:
  explicit PreconditionViolated(const std::string& what) : DomainError(what) {}
};

/// The configured reduction step budget ran out mid-computation.
class ResourceExhausted : public Error {
 public:
  explicit ResourceExhausted(const std::string& what) : Error(what) {}
};

/// Errors raised while reading polynomial text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : Error(what + " (at " + std::to_string(line) + ":" + std::to_string(col) + ")"),
        line_(line),
        col_(col) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t line, std::size_t col)
      : ParseError("unknown variable '" + name + "'", line, col) {}
};

class BadExponent : public ParseError {
 public:
  BadExponent(const std::string& what, std::size_t line, std::size_t col)
      : ParseError(what, line, col) {}
};

}  // namespace detpoly

#endif  // DETPOLY_ERRORS_HPP
