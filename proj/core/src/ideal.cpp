// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#include "detpoly/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <utility>

namespace detpoly {

namespace {

std::atomic<std::uint64_t> g_step_budget{kDefaultGroebnerStepBudget};

struct Budget {
  std::uint64_t remaining;
  void charge() {
    if (remaining == 0) {
      throw ResourceExhausted("reduction step budget exhausted");
    }
    --remaining;
  }
};

// Full normal form of p modulo basis. Every leading-term cancellation
// charges the budget once.
Polynomial reduce_modulo(Polynomial work, const std::vector<Polynomial>& basis,
                         Budget& budget) {
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lt);
      work = work.tail();
      continue;
    }
    budget.charge();
    Monomial m = lt.mono.quotient_by(divisor->leading_monomial());
    FieldElement c = lt.coeff / divisor->leading_coefficient();
    work = work - divisor->multiplied_by_term(m, c);
  }
  // Terms were collected in strictly decreasing order.
  return Polynomial::from_terms(work.context(), work.field(), std::move(remainder));
}

struct PairKey {
  std::uint64_t degree;
  std::vector<std::uint32_t> lcm_exps;
  std::size_t i;
  std::size_t j;

  friend bool operator<(const PairKey& a, const PairKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.lcm_exps != b.lcm_exps) return a.lcm_exps < b.lcm_exps;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  FieldElement one = FieldElement::one(f.field());
  Polynomial a = f.multiplied_by_term(l.quotient_by(f.leading_monomial()),
                                      one / f.leading_coefficient());
  Polynomial b = g.multiplied_by_term(l.quotient_by(g.leading_monomial()),
                                      one / g.leading_coefficient());
  return a - b;
}

// Buchberger with normal (degree-then-lex on the lcm) pair selection and
// both classic pair-dropping criteria, followed by interreduction to the
// unique reduced basis, sorted ascending. Deterministic.
std::vector<Polynomial> buchberger_reduced(const ContextPtr& ctx, const FieldSpec& spec,
                                           const std::vector<Polynomial>& gens,
                                           Budget& budget) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(basis.begin(), basis.end(), m) == basis.end()) {
      basis.push_back(std::move(m));
    }
  }
  if (basis.empty()) return {};

  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      queue.insert({l.total_degree(), l.exponents(), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  auto treated = [&](std::size_t a, std::size_t b) {
    return handled.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!queue.empty()) {
    PairKey key = *queue.begin();
    queue.erase(queue.begin());
    handled.insert({key.i, key.j});
    const Polynomial& f = basis[key.i];
    const Polynomial& g = basis[key.j];
    if (f.leading_monomial().coprime_to(g.leading_monomial())) continue;
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == key.i || k == key.j) continue;
      if (basis[k].leading_monomial().divides(l) && treated(key.i, k) && treated(key.j, k)) {
        chained = true;
      }
    }
    if (chained) continue;
    Polynomial h = reduce_modulo(s_polynomial(f, g), basis, budget);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize: keep only elements whose leading monomial is not divisible
  // by another kept element's leading monomial.
  std::stable_sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ctx->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& kept : minimal) {
      if (kept.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }

  // Tail-reduce each element modulo the others.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial r = reduce_modulo(minimal[i], others, budget);
    reduced.push_back(r.monic());
  }
  std::stable_sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ctx->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

std::string fresh_name(const std::vector<std::string>& taken, std::string stem) {
  auto used = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  while (used(stem)) stem.push_back('_');
  return stem;
}

}  // namespace

std::uint64_t groebner_step_budget() noexcept { return g_step_budget.load(); }

void set_groebner_step_budget(std::uint64_t budget) noexcept { g_step_budget.store(budget); }

Ideal::Ideal(ContextPtr ctx, const FieldSpec& spec, std::vector<Polynomial> generators)
    : ctx_(std::move(ctx)), spec_(spec), gens_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const Polynomial& g : gens_) {
    require_same_context(ctx_, g.context());
    if (!(g.field() == spec_)) throw MixedFieldError();
  }
  if (gens_.empty()) gens_.push_back(Polynomial::zero(ctx_, spec_));
}

Ideal with_cached_basis(ContextPtr ctx, const FieldSpec& spec,
                        std::vector<Polynomial> generators, std::vector<Polynomial> basis) {
  Ideal I(std::move(ctx), spec, std::move(generators));
  I.cache_->basis = std::move(basis);
  return I;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->basis) {
    Budget budget{groebner_step_budget()};
    cache_->basis = buchberger_reduced(ctx_, spec_, gens_, budget);
  }
  return *cache_->basis;
}

bool Ideal::contains_one() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

Polynomial Ideal::normal_form(const Polynomial& g) const {
  require_same_context(ctx_, g.context());
  if (!(g.field() == spec_)) throw MixedFieldError();
  Budget budget{groebner_step_budget()};
  return reduce_modulo(g, groebner_basis(), budget);
}

Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& keep_in) {
  const std::size_t n = I.context()->arity();
  std::vector<bool> kept(n, false);
  for (std::size_t v : keep_in) {
    if (v >= n) throw DomainError("kept variable index out of range");
    kept[v] = true;
  }
  std::vector<std::size_t> keep, dropped;
  for (std::size_t v = 0; v < n; ++v) (kept[v] ? keep : dropped).push_back(v);
  if (dropped.empty()) return I;

  // Reorder: eliminated variables first, then the kept block.
  std::vector<std::string> names;
  names.reserve(n);
  std::vector<std::size_t> var_map(n);
  for (std::size_t k = 0; k < dropped.size(); ++k) {
    names.push_back(I.context()->name(dropped[k]));
    var_map[dropped[k]] = k;
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    names.push_back(I.context()->name(keep[k]));
    var_map[keep[k]] = dropped.size() + k;
  }
  ContextPtr elim_ctx = make_context(std::move(names), MonomialOrder::block(dropped.size()));
  std::vector<Polynomial> lifted;
  lifted.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) {
    lifted.push_back(map_to_context(g, elim_ctx, var_map));
  }
  Ideal lifted_ideal(elim_ctx, I.field(), std::move(lifted));

  std::vector<std::string> keep_names;
  keep_names.reserve(keep.size());
  for (std::size_t v : keep) keep_names.push_back(I.context()->name(v));
  ContextPtr out_ctx = make_context(std::move(keep_names));

  std::vector<std::size_t> restrict_map(n, kUnmappedVar);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    restrict_map[dropped.size() + k] = k;
  }
  std::vector<Polynomial> out;
  for (const Polynomial& g : lifted_ideal.groebner_basis()) {
    bool pure = true;
    for (const Term& t : g.terms()) {
      for (std::size_t k = 0; k < dropped.size() && pure; ++k) {
        if (t.mono.exponent(k) != 0) pure = false;
      }
      if (!pure) break;
    }
    if (pure) out.push_back(map_to_context(g, out_ctx, restrict_map));
  }
  // The surviving elements are themselves a reduced basis on the kept block.
  std::vector<Polynomial> gens = out;
  if (gens.empty()) gens.push_back(Polynomial::zero(out_ctx, I.field()));
  return with_cached_basis(out_ctx, I.field(), std::move(gens), std::move(out));
}

namespace {

// Extend the context of I by one fresh variable and lift the generators.
struct ExtendedRing {
  ContextPtr ctx;
  std::vector<std::size_t> lift_map;  // old var -> position in new ctx
  std::size_t aux;                    // position of the fresh variable
};

ExtendedRing extend_by_one(const ContextPtr& ctx, const std::string& stem) {
  std::vector<std::string> names = ctx->names();
  names.push_back(fresh_name(names, stem));
  ExtendedRing ext;
  ext.lift_map.resize(ctx->arity());
  for (std::size_t i = 0; i < ctx->arity(); ++i) ext.lift_map[i] = i;
  ext.aux = ctx->arity();
  ext.ctx = make_context(std::move(names));
  return ext;
}

}  // namespace

bool radical_membership(const Polynomial& g, const Ideal& I) {
  require_same_context(g.context(), I.context());
  if (!(g.field() == I.field())) throw MixedFieldError();
  if (g.is_zero()) return true;
  ExtendedRing ext = extend_by_one(I.context(), "z");
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() + 1);
  for (const Polynomial& f : I.generators()) {
    gens.push_back(map_to_context(f, ext.ctx, ext.lift_map));
  }
  Polynomial z = Polynomial::variable(ext.ctx, ext.aux, I.field());
  Polynomial one = Polynomial::constant(ext.ctx, FieldElement::one(I.field()));
  gens.push_back(z * map_to_context(g, ext.ctx, ext.lift_map) - one);
  return Ideal(ext.ctx, I.field(), std::move(gens)).contains_one();
}

Ideal saturation(const Ideal& I, const Polynomial& g) {
  require_same_context(g.context(), I.context());
  if (g.is_zero()) throw DivisionByZero("saturation by the zero polynomial");
  ExtendedRing ext = extend_by_one(I.context(), "z");
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators()) {
    gens.push_back(map_to_context(f, ext.ctx, ext.lift_map));
  }
  Polynomial z = Polynomial::variable(ext.ctx, ext.aux, I.field());
  Polynomial one = Polynomial::constant(ext.ctx, FieldElement::one(I.field()));
  gens.push_back(z * map_to_context(g, ext.ctx, ext.lift_map) - one);
  Ideal extended(ext.ctx, I.field(), std::move(gens));
  std::vector<std::size_t> keep(I.context()->arity());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  Ideal eliminated = elimination_ideal(extended, keep);
  std::vector<Polynomial> back;
  for (const Polynomial& p : eliminated.groebner_basis()) {
    std::vector<std::size_t> id(I.context()->arity());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    back.push_back(map_to_context(p, I.context(), id));
  }
  return Ideal(I.context(), I.field(), std::move(back));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_context(I.context(), J.context());
  if (!(I.field() == J.field())) throw MixedFieldError();
  ExtendedRing ext = extend_by_one(I.context(), "w");
  Polynomial w = Polynomial::variable(ext.ctx, ext.aux, I.field());
  Polynomial one = Polynomial::constant(ext.ctx, FieldElement::one(I.field()));
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators()) {
    gens.push_back(w * map_to_context(f, ext.ctx, ext.lift_map));
  }
  for (const Polynomial& g : J.generators()) {
    gens.push_back((one - w) * map_to_context(g, ext.ctx, ext.lift_map));
  }
  Ideal tagged(ext.ctx, I.field(), std::move(gens));
  std::vector<std::size_t> keep(I.context()->arity());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  Ideal eliminated = elimination_ideal(tagged, keep);
  std::vector<Polynomial> back;
  for (const Polynomial& p : eliminated.groebner_basis()) {
    std::vector<std::size_t> id(I.context()->arity());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    back.push_back(map_to_context(p, I.context(), id));
  }
  return Ideal(I.context(), I.field(), std::move(back));
}

Polynomial gcd_multivariate(const Polynomial& p, const Polynomial& q) {
  require_same_context(p.context(), q.context());
  if (!(p.field() == q.field())) throw MixedFieldError();
  if (p.is_zero() && q.is_zero()) throw BothZero();
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) {
    return Polynomial::constant(p.context(), FieldElement::one(p.field()));
  }
  Ideal meet = ideal_intersection(Ideal(p.context(), p.field(), {p}),
                                  Ideal(q.context(), q.field(), {q}));
  const auto& gb = meet.groebner_basis();
  if (gb.size() != 1) {
    throw Error("intersection of principal ideals is not principal");
  }
  const Polynomial& lcm = gb.front();
  auto g = exact_divide(p * q, lcm);
  if (!g) throw Error("lcm does not divide the product");
  Polynomial result = g->monic();
  if (!exact_divide(p, result) || !exact_divide(q, result)) {
    throw Error("computed gcd fails to divide an input");
  }
  return result;
}

int dimension(const Ideal& I) {
  const std::size_t n = I.context()->arity();
  if (n > 24) throw DomainError("dimension supports at most 24 variables");
  const Ideal* work = &I;
  std::optional<Ideal> regraded;
  if (!(I.context()->order() == MonomialOrder::grevlex())) {
    ContextPtr ctx = make_context(I.context()->names());
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) {
      gens.push_back(map_to_context(g, ctx, id));
    }
    regraded.emplace(ctx, I.field(), std::move(gens));
    work = &*regraded;
  }
  if (work->contains_one()) return -1;
  std::vector<std::uint32_t> supports;
  for (const Polynomial& g : work->groebner_basis()) {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.leading_monomial().exponent(v) != 0) mask |= std::uint32_t{1} << v;
    }
    supports.push_back(mask);
  }
  // Maximal variable subset containing no leading-term support.
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t s : supports) {
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace detpoly
