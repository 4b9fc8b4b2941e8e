// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace detpoly;
using namespace detpoly::testing;

namespace {
const FieldSpec kQ = rationals();
}

TEST_CASE("basic parsing") {
  auto c = ctx({"t1", "t2"});
  CHECK(parse("t1*t2^2", c, kQ) == P("t1*t2^2", c, kQ));
  CHECK(parse("(t1+t2)^2 - 4*t1*t2", c, kQ) ==
        Polynomial::from_terms(c, kQ,
                               {{Monomial({2, 0}), FieldElement::one(kQ)},
                                {Monomial({1, 1}), FieldElement::integer(kQ, -2)},
                                {Monomial({0, 2}), FieldElement::one(kQ)}}));
  CHECK(parse("-t1 + t2", c, kQ) == parse("t2 - t1", c, kQ));
  CHECK(parse("1/2*t1 + 1/3", c, kQ).term_count() == 2);
  CHECK(parse("0", c, kQ).is_zero());
  CHECK(parse("t1^0", c, kQ).is_one());
  CHECK(parse("2*3", c, kQ) == parse("6", c, kQ));
}

TEST_CASE("precedence") {
  auto c = ctx({"t1", "t2"});
  CHECK(parse("2*t1^3", c, kQ) == parse("2*(t1^3)", c, kQ));
  CHECK(parse("t1+t2*t1", c, kQ) == parse("t1+(t2*t1)", c, kQ));
  CHECK(parse("-t1^2", c, kQ) == -parse("t1^2", c, kQ));
}

TEST_CASE("parse errors carry positions") {
  auto c = ctx({"t1", "t2"});
  CHECK_THROWS_AS(parse("t1^-1", c, kQ), BadExponent);
  CHECK_THROWS_AS(parse("t1^t2", c, kQ), BadExponent);
  CHECK_THROWS_AS(parse("t1 + ", c, kQ), SyntaxError);
  CHECK_THROWS_AS(parse("t1 t2", c, kQ), SyntaxError);  // no implicit product
  CHECK_THROWS_AS(parse("(t1", c, kQ), SyntaxError);
  CHECK_THROWS_AS(parse("1/0", c, kQ), SyntaxError);
  CHECK_THROWS_AS(parse("t3 + 1", c, kQ), UnknownVariable);

  try {
    parse("t1 +\n  %", c, kQ);
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse("t1 + zz", c, kQ);
    CHECK(false);
  } catch (const UnknownVariable& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("printing") {
  auto c = ctx({"t1", "t2"});
  CHECK(print(Polynomial::zero(c, kQ)) == "0");
  CHECK(print(P("t1*t2^2", c, kQ)) == "t1*t2^2");

  auto lex2 = ctx({"x1", "x2"}, MonomialOrder::lex());
  CHECK(print(parse("-x1 + x2", lex2, kQ)) == "-x1 + x2");

  CHECK(print(P("1/2*t1 - 7", c, kQ)) == "1/2*t1 - 7");
  CHECK(print(P("-t1^2 + 2*t2", c, kQ)) == "-t1^2 + 2*t2");

  FieldSpec f7 = FieldSpec::prime_field(7);
  CHECK(print(parse("-t1", c, f7)) == "6*t1");
}

TEST_CASE("round trip on a fixed corpus") {
  auto c = ctx({"t1", "t2", "t3"});
  for (const char* text :
       {"t1*t2^2", "(t1+t2)^2 - 4*t1*t2", "-t1 + t2", "0", "5", "-5", "1/2",
        "t1^3 - 3*t1*t2 + t3", "2/3*t1*t2*t3 - 1/7"}) {
    Polynomial p = parse(text, c, kQ);
    CHECK(parse(print(p), c, kQ) == p);
  }
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(41);
  auto c = ctx({"t1", "t2"});
  auto clex = ctx({"t1", "t2"}, MonomialOrder::lex());
  for (const FieldSpec& spec : {kQ, FieldSpec::prime_field(5)}) {
    for (int i = 0; i < 40; ++i) {
      Polynomial p = random_polynomial(rng, c, spec, 6, 4);
      CHECK(parse(print(p), c, spec) == p);
      Polynomial q = random_polynomial(rng, clex, spec, 6, 4);
      CHECK(parse(print(q), clex, spec) == q);
    }
  }
}
