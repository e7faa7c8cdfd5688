#pragma once

// Classical kinematical Lie algebras from explicit matrix realizations.
//
// Basis order is J_ab (a < b), B_1..B_D, P_1..P_D, H. Structure constants are
// read off from exact matrix commutators, so Jacobi holds by construction.
//
// Conventions. Six families come from the Cayley-Klein realization in
// (D+2) x (D+2) matrices with coordinates (t, x_1..x_D, e):
//   H   = -k1 E_et + E_te
//   P_i = -k1 k2 E_ei + E_ie
//   B_i = -k2 E_ti + E_it
//   J_ab = E_ba - E_ab
// which gives [B_i, P_j] = -k2 delta_ij H, [H, B_i] = -P_i, [H, P_i] = k1 B_i,
// [B_i, B_j] = k2 J_ij, [P_i, P_j] = k1 k2 J_ij. For Poincare (k1, k2) = (0, -1)
// this is so(1,D) acting on R^{1,D} in the block form
//   [[X, v], [0, 0]],  X in so(1,D),
// so [H, B_i] = -P_i, i.e. [B_i, H] = P_i. Flipping H -> -H flips the sign of
// ad_H and leaves every classification invariant unchanged.
//
// Carroll uses the affine realization B_i = E_ti, P_i = E_ie, H = E_te, and
// static is block diagonal with B, P and H in separate abelian blocks.

#include "kinsila/kinematics.hpp"
#include "kinsila/liecore.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kinsila::catalog {

using la::Mat;
using lie::LieAlgebra;

enum class Family {
  Poincare,
  Galilei,
  Carroll,
  DeSitter,
  AntiDeSitter,
  NewtonHookePlus,
  NewtonHookeMinus,
  Static,
};

inline constexpr std::array<Family, 8> all_families{Family::Poincare,        Family::Galilei,
                                                    Family::Carroll,         Family::DeSitter,
                                                    Family::AntiDeSitter,    Family::NewtonHookePlus,
                                                    Family::NewtonHookeMinus, Family::Static};

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::Poincare: return "poincare";
    case Family::Galilei: return "galilei";
    case Family::Carroll: return "carroll";
    case Family::DeSitter: return "de_sitter";
    case Family::AntiDeSitter: return "anti_de_sitter";
    case Family::NewtonHookePlus: return "newton_hooke_plus";
    case Family::NewtonHookeMinus: return "newton_hooke_minus";
    case Family::Static: return "static";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : all_families)
    if (to_string(f) == s) return f;
  return std::nullopt;
}

/// Basis labels marking Z, s and P.
struct Roles {
  std::vector<std::string> z, s, p;
};

struct Generators {
  std::vector<Mat> rotations, boosts, translations;
  Mat time;
};

namespace detail {

inline Mat unit(std::size_t n, std::size_t a, std::size_t b) {
  Mat m(n, n);
  m(a, b) = 1;
  return m;
}

inline Mat embed(const Mat& m, std::size_t n, std::size_t offset) {
  Mat out(n, n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(offset + i, offset + j) = m(i, j);
  return out;
}

/// E_ba - E_ab on coordinates offset+1..offset+D, for a < b.
inline std::vector<Mat> rotations(std::size_t n, std::size_t d, std::size_t offset) {
  std::vector<Mat> out;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      out.push_back(unit(n, offset + b, offset + a) - unit(n, offset + a, offset + b));
  return out;
}

struct CayleyKlein {
  int k1, k2;
};

inline std::optional<CayleyKlein> cayley_klein(Family f) {
  switch (f) {
    case Family::Poincare: return CayleyKlein{0, -1};
    case Family::DeSitter: return CayleyKlein{-1, -1};
    case Family::AntiDeSitter: return CayleyKlein{1, -1};
    case Family::NewtonHookePlus: return CayleyKlein{-1, 0};
    case Family::NewtonHookeMinus: return CayleyKlein{1, 0};
    case Family::Galilei: return CayleyKlein{0, 0};
    default: return std::nullopt;
  }
}

}  // namespace detail

/// Matrix generators of the family at space dimension d.
inline Generators realization(Family f, std::size_t d) {
  if (d < 1) throw std::invalid_argument("space dimension must be at least 1");
  using detail::unit;
  Generators g;
  if (f == Family::Static) {
    const std::size_t n = 2 * (d + 1) + 2;
    for (const auto& r : detail::rotations(d + 1, d, 0)) g.rotations.push_back(detail::embed(r, n, 0) + detail::embed(r, n, d + 1));
    for (std::size_t i = 0; i < d; ++i) g.boosts.push_back(detail::embed(unit(d + 1, i, d), n, d + 1));
    for (std::size_t i = 0; i < d; ++i) g.translations.push_back(detail::embed(unit(d + 1, i, d), n, 0));
    g.time = detail::embed(unit(2, 0, 1), n, 2 * (d + 1));
    return g;
  }
  const std::size_t n = d + 2, t = 0, e = d + 1;
  g.rotations = detail::rotations(n, d, 1);
  if (f == Family::Carroll) {
    for (std::size_t i = 1; i <= d; ++i) g.boosts.push_back(unit(n, t, i));
    for (std::size_t i = 1; i <= d; ++i) g.translations.push_back(unit(n, i, e));
    g.time = unit(n, t, e);
    return g;
  }
  const auto ck = detail::cayley_klein(f);
  if (!ck) throw std::invalid_argument("unknown family");
  const la::Rational k1 = ck->k1, k2 = ck->k2;
  for (std::size_t i = 1; i <= d; ++i) g.boosts.push_back(-k2 * unit(n, t, i) + unit(n, i, t));
  for (std::size_t i = 1; i <= d; ++i) g.translations.push_back(-(k1 * k2) * unit(n, e, i) + unit(n, i, e));
  g.time = -k1 * unit(n, e, t) + unit(n, t, e);
  return g;
}

/// Labels J12, B1, P1, H; indices are separated by '_' once D >= 10.
inline std::vector<std::string> basis_labels(std::size_t d) {
  const std::string sep = d >= 10 ? "_" : "";
  std::vector<std::string> out;
  for (std::size_t a = 1; a <= d; ++a)
    for (std::size_t b = a + 1; b <= d; ++b) out.push_back("J" + std::to_string(a) + sep + std::to_string(b));
  for (std::size_t i = 1; i <= d; ++i) out.push_back("B" + std::to_string(i));
  for (std::size_t i = 1; i <= d; ++i) out.push_back("P" + std::to_string(i));
  out.push_back("H");
  return out;
}

inline std::size_t expected_dimension(std::size_t d) { return d * (d - 1) / 2 + 2 * d + 1; }

struct Algebra {
  Family family;
  std::size_t space_dim;
  LieAlgebra algebra;
  Roles roles;
};

inline Algebra make_algebra(Family f, std::size_t d) {
  const Generators g = realization(f, d);
  std::vector<Mat> basis = g.rotations;
  basis.insert(basis.end(), g.boosts.begin(), g.boosts.end());
  basis.insert(basis.end(), g.translations.begin(), g.translations.end());
  basis.push_back(g.time);
  auto labels = basis_labels(d);
  Roles roles;
  const std::size_t nrot = g.rotations.size();
  roles.s.assign(labels.begin(), labels.begin() + static_cast<long>(nrot));
  roles.p.assign(labels.begin() + static_cast<long>(nrot), labels.end() - 1);
  roles.z = {labels.back()};
  return {f, d, LieAlgebra(std::move(labels), lie::structure_from_matrices(basis)), std::move(roles)};
}

/// Regression labels, computed by an independent symbolic oracle and frozen.
/// Defined for D >= 4; at D = 3 every family fails the exterior-square check.
inline std::optional<kin::Label> expected_label(Family f, std::size_t d) {
  if (d < 4) return std::nullopt;
  switch (f) {
    case Family::Poincare: return kin::Label::PoincareType;
    case Family::DeSitter: return kin::Label::ThreeGradedParaKahler;
    case Family::AntiDeSitter: return kin::Label::PseudoKahler;
    case Family::Galilei:
    case Family::NewtonHookePlus:
    case Family::NewtonHookeMinus:
    case Family::Static: return kin::Label::FlatRadEqualsP;
    case Family::Carroll: return kin::Label::FlatOther;
  }
  return std::nullopt;
}

inline std::optional<kin::Failure> expected_failure(Family, std::size_t d) {
  if (d == 3) return kin::Failure::WedgeConditionFails;
  return std::nullopt;
}

/// Span of the basis vectors with the given labels.
inline la::Subspace role_subspace(const LieAlgebra& L, const std::vector<std::string>& labels) {
  std::vector<la::Vec> vs;
  for (const auto& l : labels) vs.push_back(L.basis_vector(l));
  return la::Subspace::span(L.dim(), vs);
}

struct CatalogEntry {
  Family family;
  std::size_t space_dim;
  std::optional<kin::Label> expected_label;
  std::optional<kin::Failure> expected_failure;
  std::shared_ptr<const LieAlgebra> algebra;
  Roles roles;
  kin::Validation validation;
};

inline CatalogEntry make_entry(Family f, std::size_t d) {
  Algebra a = make_algebra(f, d);
  auto alg = std::make_shared<const LieAlgebra>(std::move(a.algebra));
  const auto& L = *alg;
  kin::Validation v =
      kin::validate(alg, role_subspace(L, a.roles.z), role_subspace(L, a.roles.s), role_subspace(L, a.roles.p));
  return {f, d, expected_label(f, d), expected_failure(f, d), std::move(alg), std::move(a.roles), std::move(v)};
}

/// Every family at every listed dimension, generated and validated.
inline std::vector<CatalogEntry> all_entries(const std::vector<std::size_t>& dims) {
  std::vector<CatalogEntry> out;
  for (std::size_t d : dims)
    for (Family f : all_families) out.push_back(make_entry(f, d));
  return out;
}

}  // namespace kinsila::catalog
