#pragma once

#include "kinsila/liecore/maps.hpp"

#include <optional>
#include <string>

namespace kinsila::lie {

struct LeviConstraints {
  std::optional<LinearMap> sigma;      // Levi factor must be stable under this involution
  std::optional<Subspace> containing;  // Levi factor must contain this subalgebra
};

namespace detail {

inline Subspace eigenspace(const Mat& m, int lambda) {
  return la::kernel(m - Rational(lambda) * Mat::identity(m.rows()));
}

struct LeviSetup {
  std::vector<Vec> complement;  // u_a
  std::vector<int> parity;      // +1/-1 under sigma, 0 when unconstrained
  std::vector<bool> pinned;     // correction forced to zero (u_a lies in `containing`)
  std::vector<Vec> radical;     // r_r
  std::vector<int> radical_parity;
};

inline void greedy_extend(LeviSetup& s, Subspace& span_so_far, const Subspace& from, int parity, bool pinned) {
  for (const auto& v : from.basis()) {
    Subspace next = span_so_far + Subspace::span(v.size(), {v});
    if (next.dim() == span_so_far.dim()) continue;
    span_so_far = std::move(next);
    s.complement.push_back(v);
    s.parity.push_back(parity);
    s.pinned.push_back(pinned);
  }
}

}  // namespace detail

/// Levi complement of a Lie algebra whose solvable radical R is abelian.
///
/// Picks a vector-space complement U of R and corrects it by a linear map
/// phi: U -> R so that {u + phi(u)} closes under the bracket. Writing
/// [u_a, u_b] = sum_c alpha_ab^c u_c + rho_ab with rho_ab in R, closure is the
/// linear system
///   rho_ab + [u_a, phi u_b] - [u_b, phi u_a] = sum_c alpha_ab^c phi(u_c),
/// whose solvability is Whitehead's first lemma for the R-valued cocycle rho.
///
/// Constraints (sigma-equivariance of phi, phi = 0 on `containing`) shrink
/// the unknowns; an inconsistent constrained system yields nullopt, while an
/// inconsistent unconstrained one raises TheoremViolation.
inline std::optional<Subspace> levi_complement(const LieAlgebra& L, const LeviConstraints& constraints = {}) {
  const std::size_t n = L.dim();
  const Subspace rad = solvable_radical(L);
  if (!is_abelian(L, rad)) throw Unsupported("levi_complement: solvable radical is not abelian");
  const bool constrained = constraints.sigma.has_value() || constraints.containing.has_value();

  detail::LeviSetup s;
  Subspace covered = rad;
  if (constraints.sigma) {
    const Mat& sig = constraints.sigma->matrix;
    const Subspace plus = detail::eigenspace(sig, 1), minus = detail::eigenspace(sig, -1);
    const Subspace rp = rad.intersect(plus), rm = rad.intersect(minus);
    if (rp.dim() + rm.dim() != rad.dim()) return std::nullopt;  // radical not sigma-stable
    for (const auto& v : rp.basis()) s.radical.push_back(v), s.radical_parity.push_back(1);
    for (const auto& v : rm.basis()) s.radical.push_back(v), s.radical_parity.push_back(-1);
    if (constraints.containing) {
      const Subspace cp = constraints.containing->intersect(plus), cm = constraints.containing->intersect(minus);
      if (cp.dim() + cm.dim() != constraints.containing->dim()) return std::nullopt;
      detail::greedy_extend(s, covered, cp, 1, true);
      detail::greedy_extend(s, covered, cm, -1, true);
    }
    detail::greedy_extend(s, covered, plus, 1, false);
    detail::greedy_extend(s, covered, minus, -1, false);
  } else {
    s.radical = rad.basis();
    s.radical_parity.assign(rad.dim(), 0);
    if (constraints.containing) detail::greedy_extend(s, covered, *constraints.containing, 0, true);
    detail::greedy_extend(s, covered, Subspace::full(n), 0, false);
  }
  if (constraints.containing) {
    std::size_t pinned = 0;
    for (bool p : s.pinned) pinned += p;
    if (pinned != constraints.containing->dim()) return std::nullopt;  // containing meets the radical
  }

  const std::size_t m = s.complement.size(), k = s.radical.size();
  if (m + k != n) throw std::logic_error("levi_complement: complement construction failed");
  if (k == 0) return Subspace::full(n);

  std::vector<Vec> cols = s.complement;
  cols.insert(cols.end(), s.radical.begin(), s.radical.end());
  const Mat to_coords = *la::inverse(Mat::from_columns(n, cols));

  // Unknown x_{a,r}: coefficient of r_r in phi(u_a). Index only the free ones.
  std::vector<std::vector<long>> var(m, std::vector<long>(k, -1));
  std::size_t nvars = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t r = 0; r < k; ++r) {
      if (s.pinned[a]) continue;
      if (s.parity[a] != 0 && s.parity[a] != s.radical_parity[r]) continue;
      var[a][r] = static_cast<long>(nvars++);
    }

  // T[a][r] = R-coordinates of [u_a, r_r].
  std::vector<std::vector<Vec>> t(m, std::vector<Vec>(k));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t r = 0; r < k; ++r) {
      Vec c = to_coords * L.bracket(s.complement[a], s.radical[r]);
      t[a][r] = Vec(c.begin() + static_cast<long>(m), c.end());
    }

  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec w = to_coords * L.bracket(s.complement[a], s.complement[b]);
      for (std::size_t comp = 0; comp < k; ++comp) {
        Vec row = la::zero_vec(nvars);
        for (std::size_t r = 0; r < k; ++r) {
          if (var[b][r] >= 0) row[static_cast<std::size_t>(var[b][r])] += t[a][r][comp];
          if (var[a][r] >= 0) row[static_cast<std::size_t>(var[a][r])] -= t[b][r][comp];
        }
        for (std::size_t c = 0; c < m; ++c)
          if (sgn(w[c]) != 0 && var[c][comp] >= 0) row[static_cast<std::size_t>(var[c][comp])] -= w[c];
        rows.push_back(std::move(row));
        rhs.push_back(-w[m + comp]);
      }
    }

  Vec x = la::zero_vec(nvars);
  if (!rows.empty()) {
    auto sol = la::solve(Mat::from_rows(nvars, rows), rhs);
    if (!sol) {
      if (constrained) return std::nullopt;
      throw TheoremViolation("Whitehead lemma", "Levi cochain system is inconsistent; input is not a Lie algebra");
    }
    x = sol->particular;
  }

  std::vector<Vec> levi;
  for (std::size_t a = 0; a < m; ++a) {
    Vec v = s.complement[a];
    for (std::size_t r = 0; r < k; ++r)
      if (var[a][r] >= 0) v = v + x[static_cast<std::size_t>(var[a][r])] * s.radical[r];
    levi.push_back(std::move(v));
  }
  Subspace out = Subspace::span(n, levi);
  if (!is_subalgebra(L, out) || (out + rad).dim() != n || out.dim() != m)
    throw TheoremViolation("Levi decomposition", "corrected complement is not a subalgebra complementary to the radical");
  return out;
}

struct SigmaStableLevi {
  std::optional<Subspace> levi;
  bool used_constrained_solve = false;
};

/// Any Levi factor first; if it is not sigma-stable (or misses `containing`),
/// re-solve with the equivariance constraints. An empty result is a method
/// limitation, not a proof of non-existence.
inline SigmaStableLevi find_sigma_stable_levi(const LieAlgebra& L, const LinearMap& sigma,
                                              const std::optional<Subspace>& containing) {
  auto first = levi_complement(L);
  if (first && first->invariant_under(sigma.matrix) && (!containing || first->contains(*containing)))
    return {first, false};
  return {levi_complement(L, {sigma, containing}), true};
}

}  // namespace kinsila::lie
