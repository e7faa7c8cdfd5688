#pragma once

#include "kinsila/kinematics/structure.hpp"

namespace kinsila::kin {

struct ClassificationReport {
  Label label = Label::Unclassified;
  InvolutiveStructure involution;
  SymplecticData symplectic;
  Transvection transvection;
  std::optional<KahlerSplit> kahler;
  std::optional<PoincareCertificate> poincare;
  std::string decomposability;  // "decomposable", "indecomposable" or "not determined"
  std::vector<Certificate> certificates;
  std::vector<std::string> warnings;

  const Certificate* find(std::string_view name) const {
    for (const auto& c : certificates)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline void require(bool ok, const std::string& theorem, const std::string& what) {
  if (!ok) throw TheoremViolation(theorem, what);
}

/// rad(Omega) = P: [P, P] = 0 and g = s x| (P + Z).
inline void flat_full_radical(const KinTriple& t, ClassificationReport& r) {
  const LieAlgebra& L = t.g();
  const Subspace pp = r.transvection.pp;
  require(pp.is_zero(), "radical equal to P", "[P, P] is nonzero");
  const Subspace ideal = t.p + t.z;
  require(lie::is_ideal(L, ideal), "radical equal to P", "P + Z is not an ideal");
  r.certificates.push_back({"rad(Omega)", "equals P", true, r.symplectic.radical});
  r.certificates.push_back({"[P, P]", "is zero", true, pp});
  r.certificates.push_back({"P + Z", "is an ideal, so g = s x| (P + Z)", true, ideal});
  r.label = Label::FlatRadEqualsP;
  r.decomposability = "decomposable";
}

/// rad(Omega) isomorphic to V: D + (Z + W) with W a Heisenberg factor.
inline void flat_heisenberg(const KinTriple& t, ClassificationReport& r) {
  const LieAlgebra& L = t.g();
  const Subspace& d = r.symplectic.radical;
  const Subspace dc = r.symplectic.radical_coords;
  std::optional<Subspace> w;
  for (const auto& part : t.summands)
    if (part.intersect(dc).is_zero()) {
      w = lift(t.p, part);
      break;
    }
  require(w.has_value(), "radical isomorphic to V", "no simple summand of P is transverse to rad(Omega)");
  const Subspace ww = lie::bracket_span(L, *w, *w);
  const Subspace zp = lie::bracket_span(L, t.z, t.p);
  const Subspace dd = lie::bracket_span(L, d, d);
  const Subspace dw = lie::bracket_span(L, d, *w);
  require(ww == t.z, "radical isomorphic to V", "[W, W] is not Z");
  require(zp.is_zero(), "radical isomorphic to V", "[Z, P] is nonzero");
  require(dd.is_zero(), "radical isomorphic to V", "rad(Omega) is not abelian");
  require(dw.is_zero(), "radical isomorphic to V", "[rad(Omega), W] is nonzero");
  r.certificates.push_back({"D", "rad(Omega), a simple s-module isomorphic to V", true, d});
  r.certificates.push_back({"W", "s-stable complement of D in P", true, *w});
  r.certificates.push_back({"[W, W]", "equals Z, so Z + W is a Heisenberg algebra", true, ww});
  r.certificates.push_back({"[Z, P]", "is zero", true, zp});
  r.certificates.push_back({"[D, D]", "is zero, D is abelian", true, dd});
  r.certificates.push_back({"[D, W]", "is zero", true, dw});
  r.label = Label::FlatHeisenberg;
  r.decomposability = "decomposable";
}

inline void three_graded(const KinTriple& t, ClassificationReport& r, const KahlerSplit& k) {
  r.certificates.push_back({"mu", "A^2 = mu id with mu > 0", true, k.mu});
  r.warnings.push_back("mu depends on the choice of Z0 (Z0 -> c Z0 scales it by c^2); only its sign is invariant");
  if (!k.sqrt_mu) {
    r.certificates.push_back({"K", "A / sqrt(mu) squares to the identity (kept symbolic, mu is not a rational square)",
                              true, k.j});
    r.warnings.push_back("eigenspaces of A are not defined over Q; the grading was not computed");
    r.label = Label::ThreeGradedParaKahler;
    return;
  }
  const Rational root = *k.sqrt_mu;
  r.certificates.push_back({"L", "eigenspace of A for " + la::to_string(root) +
                                     ": h-stable, abelian, Lagrangian", true, *k.l});
  r.certificates.push_back({"Lbar", "eigenspace of A for " + la::to_string(-root) +
                                        ": h-stable, abelian, Lagrangian", true, *k.lbar});
  r.certificates.push_back({"Omega on L x Lbar", "full rank, L and Lbar are in duality", true, *k.pairing});
  r.certificates.push_back({"g_1", "ad(Z0)-eigenspace for " + la::to_string(root), true, *k.l});
  r.certificates.push_back({"g_0", "ad(Z0)-kernel, equal to Z + s", true, t.h()});
  r.certificates.push_back({"g_-1", "ad(Z0)-eigenspace for " + la::to_string(-root), true, *k.lbar});
  r.label = Label::ThreeGradedParaKahler;
}

inline void pseudo_kahler(ClassificationReport& r, const KahlerSplit& k) {
  r.certificates.push_back({"mu", "A^2 = mu id with mu < 0", true, k.mu});
  r.certificates.push_back({"J", "A, an h-commuting symplectic endomorphism with J^2 = mu id; "
                                 "rescaling Z0 by 1/sqrt(-mu) gives J^2 = -id", true, k.j});
  r.warnings.push_back("mu depends on the choice of Z0 (Z0 -> c Z0 scales it by c^2); only its sign is invariant");
  r.label = Label::PseudoKahler;
}

inline void poincare_type(ClassificationReport& r, PoincareCertificate pc) {
  r.certificates.insert(r.certificates.end(), pc.items.begin(), pc.items.end());
  if (!pc.levi_found)
    r.warnings.push_back("no sigma-stable Levi factor containing s was found; the construction certifies presence "
                         "only, so this is a method limitation");
  if (pc.gates && !pc.passed) {
    for (const auto& c : pc.items)
      if (!c.holds) throw TheoremViolation("Poincare-type structure", c.name + ": " + c.claim + " fails");
  }
  if (pc.passed) {
    r.label = Label::PoincareType;
    r.warnings.push_back("annotation: for the Poincare algebra the symplectic manifold is the cotangent bundle T*(Q) "
                         "of Q = SO_0(1,D)/SO(D); not verified here");
  } else {
    r.label = Label::Unclassified;
    r.warnings.push_back("nilpotent Z-action but the Poincare-type gates do not all hold");
  }
  r.poincare = std::move(pc);
}

}  // namespace detail

/// Decision tree over the size of rad(Omega), flatness and the Z-action.
inline ClassificationReport classify(const KinTriple& t) {
  ClassificationReport r;
  r.involution = canonical_involution(t);
  r.symplectic = omega_and_radical(t);
  z_action_split(r.symplectic);
  r.transvection = transvection_and_holonomy(t);
  const auto& sd = r.symplectic;
  const std::size_t vdim = t.v_rep.dim();

  if (t.commutant_dim > 1)
    r.warnings.push_back("End_s(V) has dimension " + std::to_string(t.commutant_dim) +
                         "; V is not absolutely simple and Schur-type scalars live in this commutant");

  if (sd.radical == t.p) {
    detail::flat_full_radical(t, r);
    if (sd.z_action == ZAction::Mixed) r.warnings.push_back("Z-action has both semisimple and nilpotent parts");
    return r;
  }
  if (!sd.radical.is_zero()) {
    const rep::Rep rad_rep = rep::restrict(t.p_rep, sd.radical_coords);
    const bool iso_v = sd.radical.dim() == vdim && rep::is_simple(rad_rep).verdict == rep::Simplicity::Simple &&
                       !rep::hom_space(t.v_rep, rad_rep).empty();
    detail::require(iso_v, "radical of Omega is 0, V or P",
                    "rad(Omega) has dimension " + std::to_string(sd.radical.dim()) + " and is not isomorphic to V");
    detail::flat_heisenberg(t, r);
    return r;
  }

  // Omega is nondegenerate.
  if (r.transvection.flat) {
    r.certificates.push_back({"rad(Omega)", "is zero", true, sd.radical});
    r.certificates.push_back({"[P, P]", "lies in n", true, r.transvection.pp});
    r.certificates.push_back({"n", "centralizer of P in [P, P]", true, r.transvection.n});
    r.certificates.push_back({"holonomy", "dimension of [P, P] / n is zero", true, Rational(0)});
    r.decomposability = "not determined";
    r.warnings.push_back("flat with nondegenerate Omega: decomposability is not determined");
    r.label = Label::FlatOther;
    return r;
  }
  r.decomposability = "indecomposable";
  switch (sd.z_action) {
    case ZAction::Zero:
      r.certificates.push_back({"holonomy", "dimension of [P, P] / n", true,
                                Rational(static_cast<long>(r.transvection.holonomy_dim))});
      r.warnings.push_back("Z acts trivially on P but the holonomy is nonzero; no branch of the classification applies");
      r.label = Label::Unclassified;
      return r;
    case ZAction::Semisimple: {
      r.kahler = kahler_split(t, sd);
      if (r.kahler->kind == KahlerKind::Para) detail::three_graded(t, r, *r.kahler);
      else detail::pseudo_kahler(r, *r.kahler);
      return r;
    }
    case ZAction::Nilpotent:
      detail::poincare_type(r, poincare_certificate(t, r.involution, sd, r.transvection));
      return r;
    case ZAction::Mixed: break;  // z_action_split has already raised
  }
  r.label = Label::Unclassified;
  return r;
}

struct Analysis {
  Validation validation;
  std::optional<ClassificationReport> report;
};

/// Validation followed, on success, by classification. TheoremViolation
/// propagates.
inline Analysis analyze(std::shared_ptr<const LieAlgebra> algebra, const Subspace& z, const Subspace& s,
                        const Subspace& p) {
  Analysis a;
  a.validation = validate(std::move(algebra), z, s, p);
  if (a.validation.ok()) a.report = classify(*a.validation.triple);
  return a;
}

}  // namespace kinsila::kin
