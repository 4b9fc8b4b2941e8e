// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "detpoly/detcore.hpp"
#include "detpoly/expr.hpp"

namespace {

using namespace detpoly;

const FieldSpec kQ = FieldSpec::rationals();

std::vector<Polynomial> katsura3(const ContextPtr& c) {
  return {parse("x + 2*y + 2*z - 1", c, kQ),
          parse("x^2 + 2*y^2 + 2*z^2 - x", c, kQ),
          parse("2*x*y + 2*y*z - y", c, kQ)};
}

void BM_GroebnerKatsura3(benchmark::State& state) {
  auto c = make_context({"x", "y", "z"});
  for (auto _ : state) {
    Ideal I(c, kQ, katsura3(c));
    benchmark::DoNotOptimize(I.groebner_basis().size());
  }
}
BENCHMARK(BM_GroebnerKatsura3);

void BM_GroebnerKatsura3Lex(benchmark::State& state) {
  auto c = make_context({"x", "y", "z"}, MonomialOrder::lex());
  for (auto _ : state) {
    Ideal I(c, kQ, katsura3(c));
    benchmark::DoNotOptimize(I.groebner_basis().size());
  }
}
BENCHMARK(BM_GroebnerKatsura3Lex);

void BM_NormalForm(benchmark::State& state) {
  auto c = make_context({"x", "y", "z"});
  Ideal I(c, kQ, katsura3(c));
  I.groebner_basis();
  Polynomial g = parse("(x + y + z)^6 - 3*x*y*z + 1/2", c, kQ);
  for (auto _ : state) {
    benchmark::DoNotOptimize(I.normal_form(g).term_count());
  }
}
BENCHMARK(BM_NormalForm);

void BM_IsDetermined(benchmark::State& state) {
  auto c = make_context({"t1", "t2"});
  PolyMap f({parse("t1", c, kQ), parse("t1*t2", c, kQ)});
  Polynomial g = parse("t1*t2^2", c, kQ);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_determined(f, g).determined);
  }
}
BENCHMARK(BM_IsDetermined);

void BM_AlmostSurjectivity(benchmark::State& state) {
  auto c = make_context({"t1", "t2"});
  PolyMap f({parse("t1+t2", c, kQ), parse("t1*t2", c, kQ)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(almost_surjectivity(f).value);
  }
}
BENCHMARK(BM_AlmostSurjectivity);

void BM_Decompose(benchmark::State& state) {
  auto c = make_context({"t1", "t2"});
  PolyMap f({parse("t1+t2", c, kQ), parse("t1*t2", c, kQ)});
  Polynomial g = parse("t1^5 + t2^5", c, kQ);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(f, g, true).outer.term_count());
  }
}
BENCHMARK(BM_Decompose);

}  // namespace

BENCHMARK_MAIN();
