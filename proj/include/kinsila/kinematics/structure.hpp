#pragma once

#include "kinsila/kinematics/triple.hpp"

#include <variant>

namespace kinsila::kin {

/// A named piece of exact data together with the statement it was checked
/// against.
struct Certificate {
  using Value = std::variant<std::monostate, Subspace, Mat, Rational, std::string>;

  std::string name;
  std::string claim;
  bool holds = false;
  Value value;
};

inline std::string labels_of(const LieAlgebra& L, std::size_t i, std::size_t j) {
  return "[" + L.labels()[i] + ", " + L.labels()[j] + "]";
}

struct InvolutiveStructure {
  lie::LinearMap sigma;
  Subspace h, p;
  bool automorphism = false;
  bool involutive = false;
  bool inclusions = false;  // [h,h] in h, [h,P] in P, [P,P] in h
};

/// sigma = +1 on Z + s, -1 on P, re-verified as an involutive automorphism.
inline InvolutiveStructure canonical_involution(const KinTriple& t) {
  const LieAlgebra& L = t.g();
  InvolutiveStructure out;
  out.h = t.h();
  out.p = t.p;
  out.sigma = lie::involution_from_split(out.h, out.p);
  if (auto bad = lie::automorphism_defect(L, out.sigma))
    throw TheoremViolation("canonical involution", "sigma does not preserve " + labels_of(L, bad->first, bad->second));
  out.automorphism = la::rank(out.sigma.matrix) == L.dim();
  out.involutive = lie::is_involution(out.sigma);
  if (!out.automorphism || !out.involutive)
    throw TheoremViolation("canonical involution", "sigma is not an invertible involution");
  if (!out.h.contains(lie::bracket_span(L, out.h, out.h)))
    throw TheoremViolation("canonical involution", "[h, h] leaves h");
  if (!out.p.contains(lie::bracket_span(L, out.h, out.p)))
    throw TheoremViolation("canonical involution", "[h, P] leaves P");
  if (!out.h.contains(lie::bracket_span(L, out.p, out.p)))
    throw TheoremViolation("canonical involution", "[P, P] leaves h");
  out.inclusions = true;
  return out;
}

enum class ZAction { Zero, Nilpotent, Semisimple, Mixed };

constexpr std::string_view to_string(ZAction a) {
  switch (a) {
    case ZAction::Zero: return "ZERO";
    case ZAction::Nilpotent: return "NILPOTENT";
    case ZAction::Semisimple: return "SEMISIMPLE";
    case ZAction::Mixed: return "MIXED";
  }
  return "MIXED";
}

struct SymplecticData {
  Mat omega;                // on the echelon basis of P
  Subspace radical;         // rad(Omega) in g
  Subspace radical_coords;  // rad(Omega) in P coordinates
  Vec z0;
  Mat a;                    // ad(Z0) on P
  Mat s_part, n_part;
  ZAction z_action = ZAction::Zero;
  bool a_squared_zero = false;
};

/// Omega(X, Y) is the Z0-coefficient of [X, Y] in the splitting Z + s + P.
inline Mat omega_matrix(const KinTriple& t) {
  const LieAlgebra& L = t.g();
  const std::size_t n = L.dim();
  std::vector<Vec> cols{t.z0};
  cols.insert(cols.end(), t.s.basis().begin(), t.s.basis().end());
  cols.insert(cols.end(), t.p.basis().begin(), t.p.basis().end());
  const Mat qi = *la::inverse(Mat::from_columns(n, cols));
  Vec row(n);
  for (std::size_t j = 0; j < n; ++j) row[j] = qi(0, j);
  const std::size_t m = t.p.dim();
  Mat omega(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Rational w = la::dot(row, L.bracket(t.p.basis()[a], t.p.basis()[b]));
      omega(a, b) = w;
      omega(b, a) = -w;
    }
  return omega;
}

/// Omega restricted to U x W for subspaces U, W of P (given in g).
inline Mat omega_between(const KinTriple& t, const Mat& omega, const Subspace& u, const Subspace& w) {
  const Mat uc = descend(t.p, u).basis_matrix(), wc = descend(t.p, w).basis_matrix();
  return uc.transpose() * omega * wc;
}

inline SymplecticData omega_and_radical(const KinTriple& t) {
  const LieAlgebra& L = t.g();
  SymplecticData out;
  out.z0 = t.z0;
  out.omega = omega_matrix(t);
  std::vector<Vec> hbasis{t.z0};
  hbasis.insert(hbasis.end(), t.s.basis().begin(), t.s.basis().end());
  for (std::size_t k = 0; k < hbasis.size(); ++k) {
    const Mat m = restricted_matrix(L.ad(hbasis[k]), t.p, t.p);
    if (!(m.transpose() * out.omega + out.omega * m).is_zero())
      throw TheoremViolation("h-invariance of Omega", "fails for basis vector " + std::to_string(k) + " of Z + s");
  }
  out.radical_coords = la::kernel(out.omega);
  out.radical = lift(t.p, out.radical_coords);
  for (const auto& x : hbasis)
    if (!out.radical.invariant_under(L.ad(x))) throw TheoremViolation("radical of Omega", "rad(Omega) is not h-stable");
  if (!t.s.contains(lie::bracket_span(L, out.radical, t.p)))
    throw TheoremViolation("radical of Omega", "[rad(Omega), P] is not contained in s");
  out.a = restricted_matrix(L.ad(t.z0), t.p, t.p);
  return out;
}

/// Jordan-Chevalley split of A = ad(Z0) on P. With Omega nondegenerate, A is
/// nilpotent with A^2 = 0 or semisimple; anything else is a fault. When
/// Omega is degenerate every commuting action can occur and the type is
/// only recorded.
inline void z_action_split(SymplecticData& sd) {
  const auto sn = la::sn_decomposition(sd.a);
  sd.s_part = sn.semisimple;
  sd.n_part = sn.nilpotent;
  sd.a_squared_zero = (sd.a * sd.a).is_zero();
  const bool symplectic = sd.radical.is_zero();
  if (sd.a.is_zero()) sd.z_action = ZAction::Zero;
  else if (sd.s_part.is_zero()) sd.z_action = ZAction::Nilpotent;
  else if (sd.n_part.is_zero()) sd.z_action = ZAction::Semisimple;
  else sd.z_action = ZAction::Mixed;
  if (!symplectic) return;
  if (sd.z_action == ZAction::Mixed)
    throw TheoremViolation("nilpotent or semisimple Z-action",
                           "A = S + N with S and N both nonzero; rank S = " + std::to_string(la::rank(sd.s_part)) +
                               ", rank N = " + std::to_string(la::rank(sd.n_part)));
  if (sd.z_action == ZAction::Nilpotent && !sd.a_squared_zero)
    throw TheoremViolation("nilpotent Z-action squares to zero",
                           "A is nilpotent but A^2 has rank " + std::to_string(la::rank(sd.a * sd.a)));
}

struct Transvection {
  Subspace pp;    // [P, P]
  Subspace ghat;  // [P, P] + P
  Subspace n;     // centralizer of P in [P, P]
  std::size_t holonomy_dim = 0;
  bool flat = false;
  bool solvable = false;
};

inline Transvection transvection_and_holonomy(const KinTriple& t) {
  const LieAlgebra& L = t.g();
  Transvection out;
  out.pp = lie::bracket_span(L, t.p, t.p);
  out.ghat = out.pp + t.p;
  if (!lie::is_subalgebra(L, out.ghat)) throw TheoremViolation("transvection algebra", "[P, P] + P is not a subalgebra");
  out.n = lie::centralizer(L, t.p, out.pp);
  if (!out.n.contains(lie::bracket_span(L, out.ghat, out.n)))
    throw TheoremViolation("transvection algebra", "the centralizer of P in [P, P] is not an ideal");
  out.holonomy_dim = out.pp.dim() - out.n.dim();
  out.flat = out.n.contains(out.pp);
  out.solvable = lie::is_solvable(L, out.ghat);
  return out;
}

enum class KahlerKind { Para, Pseudo };

constexpr std::string_view to_string(KahlerKind k) { return k == KahlerKind::Para ? "para" : "pseudo"; }

struct KahlerSplit {
  KahlerKind kind = KahlerKind::Para;
  Rational mu;                     // A^2 = mu id
  std::optional<Rational> sqrt_mu; // when mu is a rational square
  std::optional<Subspace> l, lbar; // +sqrt(mu) and -sqrt(mu) eigenspaces of A, in g
  Mat j;                           // the structure datum A
  std::optional<Mat> pairing;      // Omega on L x Lbar
};

/// Splitting of P for a nonzero semisimple Z-action on a symplectic P.
inline KahlerSplit kahler_split(const KinTriple& t, const SymplecticData& sd) {
  if (sd.z_action != ZAction::Semisimple || !sd.radical.is_zero())
    throw std::invalid_argument("kahler_split: needs a nonzero semisimple Z-action and nondegenerate Omega");
  const LieAlgebra& L = t.g();
  const std::size_t m = t.p.dim();
  KahlerSplit out;
  out.j = sd.a;
  const Mat a2 = sd.a * sd.a;
  out.mu = a2(0, 0);
  if (a2 != out.mu * Mat::identity(m))
    throw TheoremViolation("eigenspace splitting", "A^2 is not a multiple of the identity");
  out.kind = sgn(out.mu) > 0 ? KahlerKind::Para : KahlerKind::Pseudo;
  if (out.kind == KahlerKind::Pseudo) return out;
  out.sqrt_mu = la::rational_sqrt(out.mu);
  if (!out.sqrt_mu) return out;

  const Rational r = *out.sqrt_mu;
  const Subspace l = lift(t.p, la::kernel(sd.a - r * Mat::identity(m)));
  const Subspace lbar = lift(t.p, la::kernel(sd.a + r * Mat::identity(m)));
  auto violated = [](const std::string& what) { throw TheoremViolation("eigenspace splitting", what); };
  if (l.dim() != m / 2 || lbar.dim() != m / 2) violated("eigenspaces of A are not half-dimensional");
  std::vector<Vec> hbasis{t.z0};
  hbasis.insert(hbasis.end(), t.s.basis().begin(), t.s.basis().end());
  for (const auto& x : hbasis) {
    const Mat ad = L.ad(x);
    if (!l.invariant_under(ad) || !lbar.invariant_under(ad)) violated("an eigenspace is not h-stable");
  }
  if (!lie::is_abelian(L, l) || !lie::is_abelian(L, lbar)) violated("an eigenspace is not abelian");
  if (!omega_between(t, sd.omega, l, l).is_zero() || !omega_between(t, sd.omega, lbar, lbar).is_zero())
    violated("an eigenspace is not Lagrangian");
  out.pairing = omega_between(t, sd.omega, l, lbar);
  if (la::rank(*out.pairing) != m / 2) violated("Omega does not pair the eigenspaces");
  out.l = l;
  out.lbar = lbar;
  return out;
}

struct PoincareCertificate {
  std::vector<Certificate> items;
  std::optional<Subspace> radical, levi, p_r, p_l;
  bool levi_found = false;
  bool used_constrained_solve = false;
  bool gates = false;  // Levi found, transvection algebra not solvable, holonomy nonzero
  bool passed = false;

  const Certificate* find(std::string_view name) const {
    for (const auto& c : items)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// The Poincare-type checks for a nonzero nilpotent Z-action on a symplectic P.
inline PoincareCertificate poincare_certificate(const KinTriple& t, const InvolutiveStructure& inv,
                                                const SymplecticData& sd, const Transvection& tr) {
  if (sd.z_action != ZAction::Nilpotent || !sd.radical.is_zero())
    throw std::invalid_argument("poincare_certificate: needs a nonzero nilpotent Z-action and nondegenerate Omega");
  const LieAlgebra& L = t.g();
  const std::size_t m = t.p.dim(), half = m / 2;
  PoincareCertificate out;
  auto add = [&](std::string name, std::string claim, bool holds, Certificate::Value value) {
    out.items.push_back({std::move(name), std::move(claim), holds, std::move(value)});
    return holds;
  };

  const Subspace rad = lie::solvable_radical(L);
  out.radical = rad;
  const bool abelian = add("R", "solvable radical is abelian", lie::is_abelian(L, rad), rad);

  bool not_solvable = add("transvection algebra", "[P, P] + P is not solvable", !tr.solvable, tr.ghat);
  bool curved = add("holonomy", "holonomy is nonzero, so the symmetric space is indecomposable", tr.holonomy_dim > 0,
                    Rational(static_cast<long>(tr.holonomy_dim)));
  if (abelian) {
    try {
      const auto found = lie::find_sigma_stable_levi(L, inv.sigma, t.s);
      out.levi = found.levi;
      out.used_constrained_solve = found.used_constrained_solve;
    } catch (const Unsupported&) {
    }
  }
  out.levi_found = out.levi.has_value();
  add("Levi factor", "sigma-stable Levi factor containing s", out.levi_found,
      out.levi ? Certificate::Value(*out.levi) : Certificate::Value(std::string("not found")));
  out.gates = out.levi_found && not_solvable && curved;
  if (!out.levi_found) return out;

  const Subspace pr = t.p.intersect(rad), pl = t.p.intersect(*out.levi);
  out.p_r = pr;
  out.p_l = pl;
  const bool halves = pr.dim() == half && pl.dim() == half && (pr + pl).dim() == m;
  bool lagrangian = halves && omega_between(t, sd.omega, pr, pr).is_zero() && omega_between(t, sd.omega, pl, pl).is_zero();
  const Mat pairing = halves ? omega_between(t, sd.omega, pr, pl) : Mat(0, 0);
  lagrangian = lagrangian && la::rank(pairing) == half;
  add("P_R", "P meet R is Lagrangian", lagrangian, pr);
  add("P_L", "P meet the Levi factor is Lagrangian and in Omega-duality with P_R", lagrangian, pl);

  bool modules = halves;
  std::optional<rep::Rep> rep_r, rep_l;
  if (halves) {
    rep_r = rep::restrict(t.p_rep, descend(t.p, pr));
    rep_l = rep::restrict(t.p_rep, descend(t.p, pl));
    for (const auto* r : {&*rep_r, &*rep_l})
      modules = modules && rep::is_simple(*r).verdict == rep::Simplicity::Simple && !rep::hom_space(t.v_rep, *r).empty();
  }
  add("P_R and P_L as s-modules", "each is simple and isomorphic to V", modules, std::monostate{});

  const Subspace bracket = lie::bracket_span(L, pr, pl);
  add("[P_R, P_L]", "equals Z", bracket == t.z, bracket);

  bool iso = false;
  Mat adz(0, 0);
  if (halves && modules) {
    try {
      adz = restricted_matrix(L.ad(t.z0), pl, pr);
      iso = la::rank(adz) == half && rep::is_intertwiner(*rep_l, *rep_r, adz);
    } catch (const std::invalid_argument&) {
      iso = false;
    }
  }
  add("ad(Z0): P_L -> P_R", "bijective s-intertwiner", iso, adz);

  out.passed = out.gates;
  for (const auto& c : out.items) out.passed = out.passed && c.holds;
  return out;
}

}  // namespace kinsila::kin
