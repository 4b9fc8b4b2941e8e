// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DETPOLY_DETCORE_HPP
#define DETPOLY_DETCORE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "detpoly/ideal.hpp"
#include "detpoly/polynomial.hpp"

namespace detpoly {

/// A polynomial map k^n -> k^m given by its components over t_1..t_n.
/// Decisions about the map are made over the algebraic closure of the
/// coefficient field.
class PolyMap {
 public:
  explicit PolyMap(std::vector<Polynomial> components);

  std::size_t domain_arity() const noexcept { return n_; }
  std::size_t codomain_arity() const noexcept { return components_.size(); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const ContextPtr& domain_context() const noexcept { return domain_; }
  /// Fresh context x_1..x_m (grevlex) for polynomials about image points.
  const ContextPtr& codomain_context() const noexcept { return codomain_; }
  /// x_1..x_{m+1}, the extra slot tracking the value of an attached
  /// polynomial.
  const ContextPtr& extended_codomain_context() const noexcept { return codomain_ext_; }
  const FieldSpec& field() const noexcept { return spec_; }

 private:
  std::vector<Polynomial> components_;
  ContextPtr domain_;
  ContextPtr codomain_;
  ContextPtr codomain_ext_;
  FieldSpec spec_;
  std::size_t n_;
};

/// Ideal <x_1 - f_1, ..., x_m - f_m> (plus <x_{m+1} - g> when g is given)
/// in k[t_1..t_n, x_1..x_m(+1)] under a block order eliminating the
/// domain variables.
Ideal graph_ideal(const PolyMap& f, const std::optional<Polynomial>& g = std::nullopt);

/// True iff the components satisfy no nonzero polynomial relation, i.e. the
/// graph ideal meets k[x_1..x_m] in the zero ideal. In characteristic zero a
/// Jacobian-rank evaluation may confirm independence early; the elimination
/// route is the authority.
bool algebraically_independent(const PolyMap& f);

/// Vanishing ideal of the closure of the image, over the codomain context.
Ideal range_closure(const PolyMap& f);

/// The monic irreducible equation of the hypersurface traced out by
/// (f_1(a),...,f_m(a),g(a)), with d its degree in the last slot.
struct ClosureCertificate {
  Polynomial q;     // over the extended codomain context, monic
  std::uint32_t d;  // degree in x_{m+1}, >= 1
  std::size_t m;
};

/// Requires algebraically independent components. Throws
/// TranscendentalOverImage when g satisfies no relation with the
/// components, NotPrincipal when the eliminated ideal is not principal.
ClosureCertificate irr_of_closure(const PolyMap& f, const Polynomial& g);

/// Certificate g * s(f) = r(f) with r, s over the codomain context.
struct RationalPair {
  Polynomial r;
  Polynomial s;
};

/// Present iff g is a rational function of the components (degree-one case
/// of the closure certificate); s is normalized monic.
std::optional<RationalPair> rational_membership(const PolyMap& f, const Polynomial& g);

/// Present iff g = p(f_1,...,f_m) for a polynomial p; found as the normal
/// form of g modulo the graph ideal, verified by composition. Coefficients
/// stay in the base field because the basis is computed over it.
std::optional<Polynomial> subalgebra_membership(const PolyMap& f, const Polynomial& g);

struct RadChiResult {
  Polynomial p;
  unsigned nu;
};

/// Smallest nu <= nu_cap with g^(chi^nu) = p(f). The default cap is
/// ceil(log_chi d) + 1 where d is the closure certificate degree; the
/// degree drop in the recursion makes the smallest hit the true minimum.
std::optional<RadChiResult> radchi_membership(const PolyMap& f, const Polynomial& g,
                                              std::optional<unsigned> nu_cap = std::nullopt);

enum class CertificateKind { None, InRing, RadChi, RationalOnly, Counterexample };

struct DeterminednessResult {
  bool determined = false;
  CertificateKind kind = CertificateKind::None;
  std::optional<Polynomial> p;          // InRing: g = p(f); RadChi: g^(chi^nu) = p(f)
  unsigned nu = 0;                      // RadChi
  std::optional<RationalPair> rational; // RationalOnly: g*s(f) = r(f)
  std::optional<Ideal> counterexample;  // proper two-point ideal
};

/// Whether g(a) = g(b) whenever f(a) = f(b), over the algebraic closure.
/// Decided directly: the system f(s) = f(u), g(s) != g(u) is unsolvable
/// iff 1 lies in <f_i(s) - f_i(u)> + <z*(g(s) - g(u)) - 1>.
DeterminednessResult is_determined(const PolyMap& f, const Polynomial& g);

/// The same decision via membership: requires algebraically independent
/// components and an almost-surjective map (verified here, else
/// HypothesisNotVerified). In characteristic zero, determined iff
/// subalgebra membership holds; in characteristic chi > 0, determined iff
/// the closure-certificate recursion ends at degree one and a chi-power of
/// g lies in the generated subalgebra.
DeterminednessResult determined_theorem_route(const PolyMap& f, const Polynomial& g);

/// Whether p(f) divides q(f) in the domain ring.
bool divides_after_composition(const Polynomial& p, const Polynomial& q, const PolyMap& f);

/// From a divisibility pair p(f) | q(f) with p not dividing q, construct
/// b = q1(f)^2 / p1(f)   (p1, q1 the coprime parts)
/// which is determined by f yet lies outside the generated subalgebra.
/// Both postconditions are checked before returning.
Polynomial non_almost_surjective_witness(const PolyMap& f, const Polynomial& p,
                                         const Polynomial& q);

enum class Tristate { Yes, No, Unknown };

/// Justification for a No verdict. In the dominant case q_tilde is a power
/// of a hypersurface witness with p(f) | q_tilde(f) but p not dividing
/// q_tilde; in the non-dominant case p is a nonzero annihilator of the
/// components and q_tilde is zero.
struct AlmostSurjWitness {
  Polynomial p;
  Polynomial q_tilde;
  bool not_dominant = false;

  bool verify(const PolyMap& f) const;
};

struct Verdict {
  Tristate value = Tristate::Unknown;
  std::optional<AlmostSurjWitness> witness;  // No
  std::optional<Ideal> obstruction;          // Yes: locus of dimension <= m-2
                                             // that contains every non-image
                                             // point; Unknown: the partial
                                             // overapproximation that blocked
                                             // the decision
};

/// Three-valued verdict on whether the closure of the complement of the
/// image has dimension at most m-2. Yes verdicts come from an
/// extension-theorem overapproximation of the non-image locus; No verdicts
/// carry an independently checkable witness; Unknown is sound.
Verdict almost_surjectivity(const PolyMap& f, unsigned power_cap = 8);

/// Outer function recovery for g = h(f): in characteristic zero a
/// polynomial p with p(f) = g; in characteristic chi > 0 a pair (p, nu)
/// with p(f) = g^(chi^nu), representing h as a chi^nu-th root of p on the
/// image.
struct DecompositionCertificate {
  Polynomial outer;
  unsigned nu = 0;
};

/// Requires an almost-surjective map (or assume_almost_surjective) and a
/// determined g; throws HypothesisNotVerified / NotDetermined otherwise.
DecompositionCertificate decompose(const PolyMap& f, const Polynomial& g,
                                   bool assume_almost_surjective = false);

// Independent re-checks of emitted certificates by their defining exact
// identities.
bool verify_closure(const PolyMap& f, const Polynomial& g, const ClosureCertificate& cert);
bool verify_rational(const PolyMap& f, const Polynomial& g, const RationalPair& pair);
bool verify_radchi(const PolyMap& f, const Polynomial& g, const RadChiResult& rc);
bool verify_determinedness(const PolyMap& f, const Polynomial& g,
                           const DeterminednessResult& res);
bool verify_decomposition(const PolyMap& f, const Polynomial& g,
                          const DecompositionCertificate& cert);

}  // namespace detpoly

#endif  // DETPOLY_DETCORE_HPP
