#pragma once

#include "kinsila/kinematics/labels.hpp"
#include "kinsila/liecore.hpp"
#include "kinsila/repth.hpp"

#include <memory>
#include <string>
#include <vector>

namespace kinsila::kin {

using la::Mat;
using la::Rational;
using la::Subspace;
using la::Vec;
using lie::LieAlgebra;
using la::operator+;
using la::operator-;
using la::operator*;

/// Matrix of m : from -> to in the echelon coordinates of both subspaces.
/// Throws when m does not carry `from` into `to`.
inline Mat restricted_matrix(const Mat& m, const Subspace& from, const Subspace& to) {
  Mat out(to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    auto c = to.coordinates(m * from.basis()[j]);
    if (!c) throw std::invalid_argument("restricted_matrix: image leaves the target subspace");
    for (std::size_t i = 0; i < to.dim(); ++i) out(i, j) = (*c)[i];
  }
  return out;
}

/// Lifts a subspace given in the coordinates of `host` to the ambient space.
inline Subspace lift(const Subspace& host, const Subspace& inner) {
  std::vector<Vec> vs;
  for (const auto& v : inner.basis()) vs.push_back(host.combine(v));
  return Subspace::span(host.ambient_dim(), vs);
}

/// Coordinates of an ambient subspace inside `host`.
inline Subspace descend(const Subspace& host, const Subspace& ambient) {
  std::vector<Vec> vs;
  for (const auto& v : ambient.basis()) {
    auto c = host.coordinates(v);
    if (!c) throw std::invalid_argument("descend: subspace is not inside the host");
    vs.push_back(std::move(*c));
  }
  return Subspace::span(host.dim(), vs);
}

/// A validated generalised kinematical Lie algebra g = Z + s + P.
struct KinTriple {
  std::shared_ptr<const LieAlgebra> algebra;
  Subspace z, s, p;
  Vec z0;                                       // marked generator of Z
  std::shared_ptr<const LieAlgebra> s_algebra;  // s on its echelon basis
  rep::Rep p_rep;                               // s acting on P, in P coordinates
  std::vector<Subspace> summands;               // P = P0 + P1, in P coordinates
  rep::Rep v_rep;                               // s acting on P0
  std::size_t wedge_hom_dim = 0;                // dim hom_s(V, wedge^2 V)
  Mat invariant_form;                           // nondegenerate s-invariant form on V
  std::size_t commutant_dim = 0;                // dim End_s(V)

  const LieAlgebra& g() const { return *algebra; }
  Subspace h() const { return z + s; }
};

enum class CheckStatus { Pass, Fail, Skipped };

constexpr std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

struct ValidationItem {
  Failure code;
  std::string check;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct Validation {
  std::vector<ValidationItem> items;
  std::optional<Failure> failure;
  std::optional<KinTriple> triple;

  bool ok() const { return triple.has_value(); }
};

/// Checks in the order they run; later checks depend on earlier ones.
inline std::vector<ValidationItem> validation_items() {
  return {
      {Failure::ShapeMismatch, "Z, s and P are subspaces of g", CheckStatus::Skipped, ""},
      {Failure::ZNotLine, "Z is a line", CheckStatus::Skipped, ""},
      {Failure::NotDirectSum, "g = Z + s + P as vector spaces", CheckStatus::Skipped, ""},
      {Failure::SNotSubalgebra, "s is a subalgebra", CheckStatus::Skipped, ""},
      {Failure::ZNotCentralizing, "[Z, s] = 0", CheckStatus::Skipped, ""},
      {Failure::PNotSStable, "[s, P] in P", CheckStatus::Skipped, ""},
      {Failure::PNotTwoCopies, "P is isomorphic to V + V", CheckStatus::Skipped, ""},
      {Failure::VNotSimple, "V is simple", CheckStatus::Skipped, ""},
      {Failure::VNotFaithful, "V is faithful", CheckStatus::Skipped, ""},
      {Failure::WedgeConditionFails, "V does not occur in wedge^2 V", CheckStatus::Skipped, ""},
      {Failure::NoInvariantForm, "V carries a nondegenerate invariant quadratic form", CheckStatus::Skipped, ""},
  };
}

/// Structure constants of a subalgebra on its echelon basis. Labels are the
/// ambient labels when the basis vector is a standard one.
inline LieAlgebra subalgebra_on_basis(const LieAlgebra& L, const Subspace& s) {
  const std::size_t k = s.dim();
  lie::StructureConstants c(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto coords = s.coordinates(L.bracket(s.basis()[i], s.basis()[j]));
      if (!coords) throw std::invalid_argument("subalgebra_on_basis: not closed under the bracket");
      c.set_bracket(i, j, *coords);
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    const Vec& v = s.basis()[i];
    std::size_t support = 0;
    for (const auto& x : v) support += sgn(x) != 0;
    labels.push_back(support == 1 ? L.labels()[s.pivots()[i]] : "s" + std::to_string(i + 1));
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

/// Checks every item of the definition of a generalised kinematical Lie
/// algebra and, on success, extracts V as one simple summand of P.
inline Validation validate(std::shared_ptr<const LieAlgebra> algebra, const Subspace& z, const Subspace& s,
                           const Subspace& p) {
  Validation out;
  out.items = validation_items();
  std::size_t next = 0;
  auto pass = [&](std::string detail = "") {
    out.items[next].status = CheckStatus::Pass;
    out.items[next].detail = std::move(detail);
    ++next;
  };
  auto fail = [&](Failure code, std::string detail) {
    // Some stages can end in one of two codes; the reported item is the one named.
    std::size_t at = next;
    for (std::size_t i = next; i < out.items.size(); ++i)
      if (out.items[i].code == code) at = i;
    out.items[at].status = CheckStatus::Fail;
    out.items[at].detail = std::move(detail);
    out.failure = code;
    return out;
  };

  const LieAlgebra& L = *algebra;
  const std::size_t n = L.dim();
  if (z.ambient_dim() != n || s.ambient_dim() != n || p.ambient_dim() != n)
    return fail(Failure::ShapeMismatch, "a subspace does not live in g (dim " + std::to_string(n) + ")");
  pass();
  if (z.dim() != 1) return fail(Failure::ZNotLine, "dim Z = " + std::to_string(z.dim()));
  pass();
  if (z.dim() + s.dim() + p.dim() != n || (z + s + p).dim() != n)
    return fail(Failure::NotDirectSum, "dims " + std::to_string(z.dim()) + " + " + std::to_string(s.dim()) + " + " +
                                           std::to_string(p.dim()) + ", span " + std::to_string((z + s + p).dim()) +
                                           ", dim g " + std::to_string(n));
  pass();
  if (!lie::is_subalgebra(L, s)) return fail(Failure::SNotSubalgebra, "[s, s] leaves s");
  pass();
  if (!lie::bracket_span(L, z, s).is_zero()) return fail(Failure::ZNotCentralizing, "[Z, s] is nonzero");
  pass();
  if (!p.contains(lie::bracket_span(L, s, p))) return fail(Failure::PNotSStable, "[s, P] leaves P");
  pass();

  KinTriple t;
  t.algebra = algebra;
  t.z = z;
  t.s = s;
  t.p = p;
  t.z0 = z.basis().front();
  t.s_algebra = std::make_shared<const LieAlgebra>(subalgebra_on_basis(L, s));
  {
    std::vector<Mat> act;
    for (const auto& x : s.basis()) act.push_back(restricted_matrix(L.ad(x), p, p));
    t.p_rep = rep::Rep(p.dim(), std::move(act), t.s_algebra);
  }
  if (p.dim() == 0 || p.dim() % 2 != 0)
    return fail(Failure::PNotTwoCopies, "dim P = " + std::to_string(p.dim()) + " is not twice a positive integer");
  std::optional<std::vector<Subspace>> parts;
  try {
    parts = rep::simple_decomposition(t.p_rep);
  } catch (const Unsupported&) {
    return fail(Failure::VNotSimple, "simplicity undetermined within the search budget");
  }
  if (!parts) return fail(Failure::PNotTwoCopies, "P is not isotypic");
  const std::size_t count = parts->size();
  if (count != 2) {
    const std::string detail = "P splits into " + std::to_string(count) + " isomorphic simple summands";
    if (count >= 4 && count % 2 == 0) return fail(Failure::VNotSimple, detail + "; each half is reducible");
    return fail(Failure::PNotTwoCopies, detail);
  }
  pass("two summands of dimension " + std::to_string((*parts)[0].dim()));
  t.summands = std::move(*parts);
  t.v_rep = rep::restrict(t.p_rep, t.summands[0]);
  const auto simple = rep::is_simple(t.v_rep);
  pass("certified by " + simple.method);
  t.commutant_dim = rep::commutant(t.v_rep).size();

  const Subspace ker = rep::representation_kernel(t.v_rep);
  if (!ker.is_zero()) return fail(Failure::VNotFaithful, "kernel of s -> gl(V) has dimension " + std::to_string(ker.dim()));
  pass();

  const rep::Rep w2 = rep::wedge_square(t.v_rep);
  t.wedge_hom_dim = rep::hom_space(t.v_rep, w2).size();
  if (t.wedge_hom_dim != 0)
    return fail(Failure::WedgeConditionFails,
                "dim hom_s(V, wedge^2 V) = " + std::to_string(t.wedge_hom_dim) + ", isotypical component of dimension " +
                    std::to_string(rep::isotypical_component(w2, t.v_rep).dim()));
  pass("dim hom_s(V, wedge^2 V) = 0");

  const auto forms = rep::invariant_symmetric_forms(t.v_rep);
  if (!forms.witness) {
    const std::string why = forms.proven_degenerate ? "every invariant symmetric form is degenerate"
                                                    : "no nondegenerate form found within the search budget";
    return fail(Failure::NoInvariantForm,
                why + " (" + std::to_string(forms.basis.size()) + "-dimensional space of invariant forms)");
  }
  t.invariant_form = *forms.witness;
  pass(std::to_string(forms.basis.size()) + "-dimensional space of invariant forms");

  out.triple = std::move(t);
  return out;
}

inline Validation validate(const LieAlgebra& L, const Subspace& z, const Subspace& s, const Subspace& p) {
  return validate(std::make_shared<const LieAlgebra>(L), z, s, p);
}

}  // namespace kinsila::kin
