#pragma once

#include "kinsila/repth/hom.hpp"

#include <cmath>

namespace kinsila::rep {

/// Index of e_i ^ e_j (i < j) in the lexicographic wedge basis.
inline std::size_t wedge_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Derivation action on the wedge basis:
/// X(e_i ^ e_j) = X e_i ^ e_j + e_i ^ X e_j.
inline Mat wedge_matrix(const Mat& x) {
  const std::size_t n = x.rows(), m = n * (n - (n > 0 ? 1 : 0)) / 2;
  Mat w(m, m);
  auto add = [&](std::size_t a, std::size_t b, std::size_t col, const Rational& c) {
    if (a == b || sgn(c) == 0) return;
    if (a < b) w(wedge_index(n, a, b), col) += c;
    else w(wedge_index(n, b, a), col) -= c;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t col = wedge_index(n, i, j);
      for (std::size_t k = 0; k < n; ++k) {
        add(k, j, col, x(k, i));
        add(i, k, col, x(k, j));
      }
    }
  return w;
}

inline Rep wedge_square(const Rep& r) {
  const std::size_t n = r.dim();
  std::vector<Mat> act;
  for (const auto& m : r.action()) act.push_back(wedge_matrix(m));
  return Rep(n * (n - (n > 0 ? 1 : 0)) / 2, std::move(act), r.algebra());
}

/// Form induced on the exterior square: (u1^u2, v1^v2) -> det [[B(u1,v1), B(u1,v2)], [B(u2,v1), B(u2,v2)]].
inline Mat wedge_form(const Mat& b) {
  const std::size_t n = b.rows(), m = n * (n - (n > 0 ? 1 : 0)) / 2;
  Mat w(m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          w(wedge_index(n, i, j), wedge_index(n, k, l)) = b(i, k) * b(j, l) - b(i, l) * b(j, k);
  return w;
}

inline bool preserves_form(const Rep& r, const Mat& b) {
  for (const auto& x : r.action())
    if (!(x.transpose() * b + b * x).is_zero()) return false;
  return true;
}

struct FormSearch {
  std::vector<Mat> basis;      // invariant symmetric forms
  std::optional<Mat> witness;  // a nondegenerate member
  bool proven_degenerate = false;  // every member is degenerate (exhaustive grid)
  std::size_t evaluations = 0;
};

/// Evaluation budget for the nondegeneracy search over the parameter grid.
inline constexpr std::size_t kFormGridBudget = 50000;

/// Invariant symmetric bilinear forms {B = B^T : x^T B + B x = 0} and a
/// nondegenerate witness. det(sum_k t_k B_k) has degree at most n in each
/// t_k, so if it vanishes on the grid {0..n}^m it vanishes identically. The
/// identity (when invariant) and the basis forms are tried first; the full
/// grid is walked only within kFormGridBudget evaluations.
inline FormSearch invariant_symmetric_forms(const Rep& r) {
  const std::size_t n = r.dim(), nv = n * (n + 1) / 2;
  auto var = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + j;
  };
  la::RowReducer rr(nv);
  for (const auto& x : r.action())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        // (x^T B + B x)(i,j) = sum_k x(k,i) B(k,j) + B(i,k) x(k,j)
        Vec row = la::zero_vec(nv);
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(x(k, i)) != 0) row[var(k, j)] += x(k, i);
          if (sgn(x(k, j)) != 0) row[var(i, k)] += x(k, j);
        }
        rr.insert(std::move(row));
      }
  FormSearch out;
  const Subspace sol = la::kernel_of_rows(nv, rr.rows());
  for (const auto& v : sol.basis()) {
    Mat b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = v[var(i, j)];
    if (!preserves_form(r, b)) throw std::logic_error("invariant_symmetric_forms: solution is not invariant");
    out.basis.push_back(std::move(b));
  }
  const std::size_t m = out.basis.size();
  if (m == 0) {
    out.proven_degenerate = n > 0;
    if (n == 0) out.witness = Mat(0, 0);
    return out;
  }
  auto try_form = [&](const Mat& b) {
    ++out.evaluations;
    if (sgn(la::determinant(b)) != 0) {
      out.witness = b;
      return true;
    }
    return false;
  };
  if (preserves_form(r, Mat::identity(n)) && try_form(Mat::identity(n))) return out;
  for (const auto& b : out.basis)
    if (try_form(b)) return out;

  const double grid = std::pow(static_cast<double>(n + 1), static_cast<double>(m));
  const bool exhaustive = grid <= static_cast<double>(kFormGridBudget);
  std::vector<std::size_t> t(m, 0);
  for (std::size_t step = 0; step < kFormGridBudget; ++step) {
    Mat b(n, n);
    for (std::size_t k = 0; k < m; ++k)
      if (t[k] != 0) b = b + Rational(static_cast<long>(t[k])) * out.basis[k];
    if (try_form(b)) return out;
    std::size_t k = 0;
    while (k < m && ++t[k] > n) t[k++] = 0;
    if (k == m) break;
  }
  out.proven_degenerate = exhaustive;
  return out;
}

}  // namespace kinsila::rep
