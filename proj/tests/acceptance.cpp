// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one criterion per function, one pass/fail line each.
// All arithmetic is exact, so every comparison is structural equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace detpoly;
using namespace detpoly::testing;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

std::vector<Polynomial> g_registry;

Polynomial track(Polynomial p) {
  g_registry.push_back(p);
  return p;
}

struct Check {
  bool ok = true;
  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      std::printf("    failed: %s\n", what.c_str());
    }
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

PolyMap tracked_map(const ContextPtr& c, const FieldSpec& spec,
                    const std::vector<std::string>& comps) {
  std::vector<Polynomial> fs;
  for (const std::string& text : comps) fs.push_back(track(parse(text, c, spec)));
  return PolyMap(std::move(fs));
}

// ---------------------------------------------------------------------------
// Criterion 1: the introductory example suite, exact, < 1 s per query.

bool criterion1() {
  Check c;
  auto t2v = ctx({"t1", "t2"});

  {
    auto start = Clock::now();
    PolyMap f = tracked_map(t2v, kQ, {"t1", "t1*t2"});
    Polynomial b = track(parse("t1*t2^2", t2v, kQ));
    DeterminednessResult det = is_determined(f, b);
    c.expect(det.determined, "t1*t2^2 is determined by (t1, t1*t2)");
    c.expect(!subalgebra_membership(f, b).has_value(),
             "t1*t2^2 is not a polynomial in (t1, t1*t2)");
    auto rat = rational_membership(f, b);
    c.expect(rat.has_value(), "t1*t2^2 is a rational function of the map");
    if (rat) {
      c.expect(track(rat->r) == parse("x2^2", f.codomain_context(), kQ) &&
                   track(rat->s) == parse("x1", f.codomain_context(), kQ),
               "rational certificate equals (x2^2, x1)");
      c.expect(verify_rational(f, b, *rat), "rational certificate re-verifies");
    }
    c.expect(ms_since(start) < 1000.0, "t1*t2^2 queries finish under 1 s");
  }

  {
    auto start = Clock::now();
    PolyMap f = tracked_map(t2v, kQ, {"t1", "t1*t2"});
    Polynomial g = track(parse("t2", t2v, kQ));
    c.expect(!is_determined(f, g).determined, "t2 is not determined by (t1, t1*t2)");
    auto rat = rational_membership(f, g);
    c.expect(rat.has_value(), "t2 is a rational function of the map");
    if (rat) {
      c.expect(track(rat->r) == parse("x2", f.codomain_context(), kQ) &&
                   track(rat->s) == parse("x1", f.codomain_context(), kQ),
               "rational certificate equals (x2, x1)");
    }
    c.expect(ms_since(start) < 1000.0, "t2 queries finish under 1 s");
  }

  for (std::uint64_t chi : {2ULL, 3ULL}) {
    auto start = Clock::now();
    FieldSpec spec = FieldSpec::prime_field(chi);
    auto t1v = ctx({"t1"});
    PolyMap f = tracked_map(t1v, spec, {"t1^" + std::to_string(chi)});
    Polynomial g = track(parse("t1", t1v, spec));
    c.expect(is_determined(f, g).determined,
             "t1 is determined by t1^" + std::to_string(chi));
    auto rc = radchi_membership(f, g);
    c.expect(rc.has_value(), "a chi-power of t1 lies in the subalgebra");
    if (rc) {
      c.expect(track(rc->p) == parse("x1", f.codomain_context(), spec) && rc->nu == 1,
               "chi-power certificate equals (x1, 1)");
      c.expect(verify_radchi(f, g, *rc), "chi-power certificate re-verifies");
    }
    DeterminednessResult thm = determined_theorem_route(f, g);
    c.expect(thm.determined && thm.kind == CertificateKind::RadChi && thm.nu == 1,
             "membership route reports the same (x1, 1) certificate");
    c.expect(ms_since(start) < 1000.0,
             "char-" + std::to_string(chi) + " queries finish under 1 s");
  }
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criteria 2-4 share a corpus of (map, polynomial) pairs.

struct CorpusEntry {
  PolyMap map;
  std::vector<Polynomial> polys;
};

std::vector<CorpusEntry> rational_corpus() {
  auto t2v = ctx({"t1", "t2"});
  auto t1v = ctx({"t1"});
  std::vector<CorpusEntry> corpus;
  auto add = [&](const ContextPtr& c, std::vector<std::string> comps,
                 std::vector<std::string> gs) {
    CorpusEntry entry{tracked_map(c, kQ, comps), {}};
    for (const std::string& text : gs) entry.polys.push_back(track(parse(text, c, kQ)));
    corpus.push_back(std::move(entry));
  };
  add(t2v, {"t1+t2", "t1*t2"},
      {"t1^2+t2^2", "t1^3+t2^3", "t1*t2", "t1", "t1-t2", "t1^2*t2+t1*t2^2"});
  add(t2v, {"t1", "t2"}, {"t1", "t1^2*t2-3", "t2^3", "t1*t2^2"});
  add(t2v, {"t1^2", "t2"}, {"t1^2", "t1", "t1^2*t2", "t1^3", "t1^4+t2"});
  add(t2v, {"t1", "t1*t2"}, {"t1*t2^2", "t2", "t1", "t1*t2"});
  add(t1v, {"t1^2", "t1^3"}, {"t1^2", "t1^5"});
  return corpus;
}

std::vector<CorpusEntry> prime_corpus(std::uint64_t chi) {
  FieldSpec spec = FieldSpec::prime_field(chi);
  auto t2v = ctx({"t1", "t2"});
  auto t1v = ctx({"t1"});
  std::vector<CorpusEntry> corpus;
  auto add = [&](const ContextPtr& c, std::vector<std::string> comps,
                 std::vector<std::string> gs) {
    CorpusEntry entry{tracked_map(c, spec, comps), {}};
    for (const std::string& text : gs) entry.polys.push_back(track(parse(text, c, spec)));
    corpus.push_back(std::move(entry));
  };
  std::string frob = "t1^" + std::to_string(chi);
  add(t1v, {frob}, {"t1", frob, frob + "+t1", "t1^2+t1"});
  add(t2v, {"t1+t2", "t1*t2"}, {"t1+t2", "t1*t2", "t1^2+t2^2", "t1", "t1^2*t2^2"});
  return corpus;
}

bool criterion2(std::vector<CorpusEntry>& out_corpus) {
  Check c;
  auto start = Clock::now();
  out_corpus = rational_corpus();
  std::size_t pairs = 0;
  for (const CorpusEntry& entry : out_corpus) pairs += entry.polys.size();
  c.expect(pairs >= 20, "corpus holds at least 20 pairs (got " + std::to_string(pairs) + ")");

  for (const CorpusEntry& entry : out_corpus) {
    const PolyMap& f = entry.map;
    Verdict as = almost_surjectivity(f);
    bool indep = algebraically_independent(f);
    for (const Polynomial& g : entry.polys) {
      bool det = is_determined(f, g).determined;
      auto member = subalgebra_membership(f, g);
      if (member) track(*member);
      // Membership always implies determinedness.
      c.expect(!member || det, "membership implies determinedness");
      if (as.value == Tristate::Yes) {
        c.expect(det == member.has_value(),
                 "determined iff member under an almost-surjective map: g=" + print(g));
        // Rational functions of the map collapse into the subalgebra.
        if (indep && rational_membership(f, g).has_value()) {
          c.expect(member.has_value(),
                   "rational membership implies subalgebra membership: g=" + print(g));
        }
      }
    }
    if (as.value == Tristate::No && as.witness && !as.witness->not_dominant) {
      Polynomial b =
          track(non_almost_surjective_witness(f, track(as.witness->p), track(as.witness->q_tilde)));
      c.expect(is_determined(f, b).determined, "constructed witness is determined");
      c.expect(!subalgebra_membership(f, b).has_value(),
               "constructed witness lies outside the subalgebra");
    }
  }
  double elapsed = ms_since(start);
  c.expect(elapsed < 60000.0, "criterion finishes under 60 s");
  return c.ok;
}

bool criterion3(std::vector<CorpusEntry>& out_corpus) {
  Check c;
  std::size_t pairs = 0;
  for (std::uint64_t chi : {2ULL, 3ULL}) {
    std::vector<CorpusEntry> corpus = prime_corpus(chi);
    for (const CorpusEntry& entry : corpus) {
      const PolyMap& f = entry.map;
      bool indep = algebraically_independent(f);
      Verdict as = almost_surjectivity(f);
      for (const Polynomial& g : entry.polys) {
        ++pairs;
        bool det = is_determined(f, g).determined;
        if (as.value == Tristate::Yes) {
          auto rc = radchi_membership(f, g);
          if (rc) track(rc->p);
          c.expect(det == rc.has_value(),
                   "determined iff some chi-power is a member: g=" + print(g));
        }
        if (indep && as.value == Tristate::Yes) {
          DeterminednessResult thm = determined_theorem_route(f, g);
          c.expect(det == thm.determined, "route agreement on g=" + print(g));
        }
      }
      out_corpus.push_back(entry);
    }
  }
  c.expect(pairs >= 10, "corpus holds at least 10 pairs (got " + std::to_string(pairs) + ")");
  return c.ok;
}

bool criterion4(const std::vector<CorpusEntry>& corpus) {
  Check c;
  for (const CorpusEntry& entry : corpus) {
    const PolyMap& f = entry.map;
    if (!algebraically_independent(f)) continue;
    const std::uint64_t chi = f.field().characteristic();
    for (const Polynomial& g : entry.polys) {
      if (!is_determined(f, g).determined) continue;
      // Walk the chi-power recursion down to a degree-one closure equation.
      Polynomial h = g;
      unsigned nu = 0;
      std::uint32_t d = 0;
      for (unsigned guard = 0; guard < 16; ++guard) {
        ClosureCertificate cert = irr_of_closure(f, h);
        track(cert.q);
        d = cert.d;
        if (d == 1) break;
        c.expect(chi > 0, "degree exceeds one only in positive characteristic: g=" + print(g));
        if (chi == 0) break;
        c.expect(partial_derivative(cert.q, f.codomain_arity()).is_zero(),
                 "the closure equation degenerates in x_{m+1}^chi: g=" + print(g));
        h = h.pow(chi);
        ++nu;
      }
      c.expect(d == 1, "recursion reaches degree one: g=" + print(g));
      c.expect(chi > 0 || nu == 0, "no recursion happens in characteristic zero");
      auto rat = rational_membership(f, h);
      c.expect(rat.has_value(), "degree one yields a rational certificate: g=" + print(g));
      if (rat) {
        track(rat->r);
        track(rat->s);
        c.expect(h * compose(rat->s, f.components()) == compose(rat->r, f.components()),
                 "identity g^(chi^nu) * s(f) = r(f) holds exactly: g=" + print(g));
      }
    }
  }
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criterion 5: almost-surjectivity verdicts on the named maps, < 10 s each.

bool criterion5() {
  Check c;
  auto t2v = ctx({"t1", "t2"});

  {
    auto start = Clock::now();
    PolyMap f = tracked_map(t2v, kQ, {"t1", "t1*t2"});
    Verdict v = almost_surjectivity(f);
    c.expect(v.value == Tristate::No, "(t1, t1*t2) is not almost surjective");
    c.expect(v.witness.has_value() && !v.witness->not_dominant,
             "the verdict carries a divisibility witness");
    if (v.witness) {
      track(v.witness->p);
      track(v.witness->q_tilde);
      c.expect(v.witness->verify(f), "witness re-verifies by exact division");
      c.expect(v.witness->p == parse("x1", f.codomain_context(), kQ),
               "witness hypersurface is x1");
    }
    c.expect(ms_since(start) < 10000.0, "verdict under 10 s");
  }
  {
    auto start = Clock::now();
    PolyMap f = tracked_map(t2v, kQ, {"t1+t2", "t1*t2"});
    c.expect(almost_surjectivity(f).value == Tristate::Yes,
             "(t1+t2, t1*t2) is almost surjective");
    c.expect(ms_since(start) < 10000.0, "verdict under 10 s");
  }
  {
    auto start = Clock::now();
    PolyMap f = tracked_map(t2v, kQ, {"t1^2", "t2"});
    c.expect(almost_surjectivity(f).value == Tristate::Yes,
             "(t1^2, t2) is almost surjective");
    c.expect(ms_since(start) < 10000.0, "verdict under 10 s");
  }
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criterion 6: oracle equivalences for dimension and gcd.

bool criterion6() {
  Check c;
  std::mt19937_64 rng(2026);
  auto c3 = ctx({"x1", "x2", "x3"});
  int ideals = 0;
  while (ideals < 12) {
    Polynomial a = random_polynomial(rng, c3, kQ, 3, 2);
    Polynomial b = random_polynomial(rng, c3, kQ, 3, 2);
    Ideal I(c3, kQ, {track(a), track(b)});
    int fast = dimension(I);
    int brute = dimension_by_subsets(I);
    c.expect(fast == brute,
             "dimension fast path equals subset oracle (" + std::to_string(fast) + " vs " +
                 std::to_string(brute) + ")");
    ++ideals;
  }

  auto c2 = ctx({"x1", "x2"});
  int pairs = 0;
  while (pairs < 50) {
    Polynomial d = random_nonzero_polynomial(rng, c2, kQ, 2, 2);
    Polynomial a = random_nonzero_polynomial(rng, c2, kQ, 2, 2);
    Polynomial b = random_nonzero_polynomial(rng, c2, kQ, 2, 2);
    Polynomial p = track(d * a);
    Polynomial q = track(d * b);
    Polynomial g = track(gcd_multivariate(p, q));
    c.expect(exact_divide(p, g).has_value() && exact_divide(q, g).has_value(),
             "gcd divides both inputs");
    c.expect(exact_divide(g, d).has_value(), "gcd absorbs the planted common factor");
    ++pairs;
  }
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criterion 7: determinedness never contradicts exhaustive prime-field grids.

bool criterion7() {
  Check c;
  auto start = Clock::now();
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
    FieldSpec spec = FieldSpec::prime_field(p);
    auto t1v = ctx({"t1"});
    auto t2v = ctx({"t1", "t2"});
    auto t3v = ctx({"t1", "t2", "t3"});
    struct Sample {
      PolyMap map;
      Polynomial g;
    };
    std::vector<Sample> samples;
    auto add = [&](const ContextPtr& cx, std::vector<std::string> comps, std::string g) {
      samples.push_back({tracked_map(cx, spec, comps), track(parse(g, cx, spec))});
    };
    add(t1v, {"t1^2"}, "t1");
    add(t1v, {"t1^" + std::to_string(p)}, "t1");
    add(t2v, {"t1", "t1*t2"}, "t2");
    add(t2v, {"t1+t2", "t1*t2"}, "t1");
    add(t2v, {"t1+t2", "t1*t2"}, "t1^2+t2^2");
    add(t3v, {"t1", "t2", "t1*t3"}, "t3");
    add(t3v, {"t1", "t2", "t3"}, "t1+t2*t3");

    for (const Sample& s : samples) {
      auto violation = grid_search_violation(s.map, s.g);
      bool det = is_determined(s.map, s.g).determined;
      if (violation) {
        c.expect(!det, "a glued pair disproves determinedness: g=" + print(s.g) +
                           " over GF(" + std::to_string(p) + ")");
      }
      if (det) {
        c.expect(!violation.has_value(),
                 "determined polynomials never split a glued pair: g=" + print(s.g));
      }
    }
  }
  double elapsed = ms_since(start);
  c.expect(elapsed < 120000.0, "criterion finishes under 120 s");
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criterion 8: parse/print round trip over every polynomial seen above.

bool criterion8() {
  Check c;
  c.expect(!g_registry.empty(), "the registry collected polynomials");
  std::size_t failures = 0;
  for (const Polynomial& p : g_registry) {
    if (parse(print(p), p.context(), p.field()) != p) ++failures;
  }
  c.expect(failures == 0, std::to_string(failures) + " round-trip failures out of " +
                              std::to_string(g_registry.size()));
  return c.ok;
}

struct Criterion {
  int number;
  const char* description;
  std::function<bool()> run;
};

}  // namespace

int main() {
  std::vector<CorpusEntry> corpus2;
  std::vector<CorpusEntry> corpus3;
  std::vector<Criterion> criteria = {
      {1, "introductory example suite (exact values)", criterion1},
      {2, "determined iff member, char 0, with constructed witnesses",
       [&] { return criterion2(corpus2); }},
      {3, "determined iff chi-power member over GF(2), GF(3); route agreement",
       [&] { return criterion3(corpus3); }},
      {4, "closure recursion reaches degree one; rational identity exact",
       [&] {
         std::vector<CorpusEntry> all = corpus2;
         all.insert(all.end(), corpus3.begin(), corpus3.end());
         return criterion4(all);
       }},
      {5, "almost-surjectivity verdicts on the named maps", criterion5},
      {6, "dimension and gcd oracle equivalence", criterion6},
      {7, "prime-field grid sampling consistency", criterion7},
      {8, "parse/print round trip on every polynomial used", criterion8},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    auto start = Clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = criterion.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed = ms_since(start);
    std::printf("criterion %d: %s  %s  (%.0f ms)\n", criterion.number,
                ok ? "PASS" : "FAIL", criterion.description, elapsed);
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (!ok) ++failed;
  }
  if (failed != 0) {
    std::printf("%d criteria failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
