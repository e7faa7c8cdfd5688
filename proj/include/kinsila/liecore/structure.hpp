#pragma once

#include "kinsila/liecore/lie_algebra.hpp"

#include <vector>

namespace kinsila::lie {

/// span{[a, b] : a in A, b in B}.
inline Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vec> out;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) out.push_back(L.bracket(x, y));
  return Subspace::span(L.dim(), out);
}

inline bool is_subalgebra(const LieAlgebra& L, const Subspace& s) { return s.contains(bracket_span(L, s, s)); }

inline bool is_ideal(const LieAlgebra& L, const Subspace& i) {
  return i.contains(bracket_span(L, Subspace::full(L.dim()), i));
}

inline bool is_abelian(const LieAlgebra& L, const Subspace& s) { return bracket_span(L, s, s).is_zero(); }

/// Smallest bracket-closed subspace containing `gens`.
inline Subspace subalgebra_closure(const LieAlgebra& L, const Subspace& gens) {
  Subspace cur = gens;
  while (true) {
    Subspace next = cur + bracket_span(L, cur, cur);
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

/// {x in within : [x, y] = 0 for all y in of}.
inline Subspace centralizer(const LieAlgebra& L, const Subspace& of, const Subspace& within) {
  const std::size_t m = within.dim();
  if (m == 0 || of.is_zero()) return within;
  // Unknown coefficients a with x = sum_k a_k w_k; [x, y] = sum_k a_k [w_k, y].
  std::vector<Vec> rows;
  for (const auto& y : of.basis()) {
    std::vector<Vec> cols;
    for (const auto& w : within.basis()) cols.push_back(L.bracket(w, y));
    for (std::size_t r = 0; r < L.dim(); ++r) {
      Vec row(m);
      for (std::size_t k = 0; k < m; ++k) row[k] = cols[k][r];
      rows.push_back(std::move(row));
    }
  }
  std::vector<Vec> out;
  const Subspace sol = la::kernel_of_rows(m, rows);
  for (const auto& a : sol.basis()) out.push_back(within.combine(a));
  return Subspace::span(L.dim(), out);
}

inline Subspace center(const LieAlgebra& L) {
  const Subspace all = Subspace::full(L.dim());
  return centralizer(L, all, all);
}

/// Killing form B(x, y) = tr(ad_x ad_y) on basis vectors.
inline Mat killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Mat b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // tr(AB) = sum_{r,s} A(r,s) B(s,r)
      const Mat& a = L.ad_basis(i);
      const Mat& c = L.ad_basis(j);
      Rational t = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if (sgn(a(r, s)) != 0 && sgn(c(s, r)) != 0) t += a(r, s) * c(s, r);
      b(i, j) = t;
      b(j, i) = t;
    }
  return b;
}

inline Subspace derived_subalgebra(const LieAlgebra& L, const Subspace& s) { return bracket_span(L, s, s); }

inline Subspace derived_subalgebra(const LieAlgebra& L) {
  const Subspace all = Subspace::full(L.dim());
  return bracket_span(L, all, all);
}

/// s, [s,s], [[s,s],[s,s]], ... until it stabilizes (last entry repeated once).
inline std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& s) {
  std::vector<Subspace> series{s};
  while (true) {
    Subspace next = derived_subalgebra(L, series.back());
    bool stable = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stable) return series;
  }
}

inline bool is_solvable(const LieAlgebra& L, const Subspace& s) { return derived_series(L, s).back().is_zero(); }

/// Solvable radical, as the Killing-orthogonal of [g, g] (valid in characteristic zero).
inline Subspace solvable_radical(const LieAlgebra& L) {
  const Mat b = killing_form(L);
  std::vector<Vec> rows;
  const Subspace derived = derived_subalgebra(L);
  for (const auto& y : derived.basis()) rows.push_back(b * y);
  return la::kernel_of_rows(L.dim(), rows);
}

}  // namespace kinsila::lie
