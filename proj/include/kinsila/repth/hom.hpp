#pragma once

#include "kinsila/repth/rep.hpp"

namespace kinsila::rep {

/// Basis of {T : T rho1(x) = rho2(x) T for all x}, as dim2 x dim1 matrices.
/// All generators go into a single kernel problem over the entries of T.
inline std::vector<Mat> hom_space(const Rep& r1, const Rep& r2) {
  if (!same_algebra(r1, r2)) throw std::invalid_argument("hom_space: representations of different algebras");
  const std::size_t n1 = r1.dim(), n2 = r2.dim(), nv = n1 * n2;
  auto var = [n1](std::size_t a, std::size_t b) { return a * n1 + b; };
  la::RowReducer rr(nv);
  for (std::size_t g = 0; g < r1.generators() && rr.rank() < nv; ++g) {
    const Mat& x1 = r1.action(g);
    const Mat& x2 = r2.action(g);
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n1; ++j) {
        // (T x1)(i,j) - (x2 T)(i,j)
        Vec row = la::zero_vec(nv);
        for (std::size_t k = 0; k < n1; ++k)
          if (sgn(x1(k, j)) != 0) row[var(i, k)] += x1(k, j);
        for (std::size_t k = 0; k < n2; ++k)
          if (sgn(x2(i, k)) != 0) row[var(k, j)] -= x2(i, k);
        rr.insert(std::move(row));
      }
  }
  const Subspace sol = la::kernel_of_rows(nv, rr.rows());
  std::vector<Mat> out;
  for (const auto& v : sol.basis()) {
    Mat t(n2, n1);
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n1; ++j) t(i, j) = v[var(i, j)];
    for (std::size_t g = 0; g < r1.generators(); ++g)
      if (t * r1.action(g) != r2.action(g) * t) throw std::logic_error("hom_space: solution fails to intertwine");
    out.push_back(std::move(t));
  }
  return out;
}

inline bool is_intertwiner(const Rep& r1, const Rep& r2, const Mat& t) {
  if (t.rows() != r2.dim() || t.cols() != r1.dim()) return false;
  for (std::size_t g = 0; g < r1.generators(); ++g)
    if (t * r1.action(g) != r2.action(g) * t) return false;
  return true;
}

/// End_s(V). Closed under products.
inline std::vector<Mat> commutant(const Rep& r) {
  auto basis = hom_space(r, r);
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(b.flat());
  const Subspace span = Subspace::span(r.dim() * r.dim(), flat);
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!span.contains((a * b).flat())) throw std::logic_error("commutant: not closed under products");
  return basis;
}

/// {x in s : rho(x) = 0}.
inline Subspace representation_kernel(const Rep& r) {
  std::vector<Vec> cols;
  for (const auto& m : r.action()) cols.push_back(m.flat());
  return la::kernel(Mat::from_columns(r.dim() * r.dim(), cols));
}

inline bool is_faithful(const Rep& r) { return representation_kernel(r).is_zero(); }

/// Sum of the images of all intertwiners V -> M.
inline Subspace isotypical_component(const Rep& m, const Rep& v) {
  std::vector<Vec> gens;
  for (const auto& t : hom_space(v, m))
    for (std::size_t j = 0; j < t.cols(); ++j) gens.push_back(t.col(j));
  return Subspace::span(m.dim(), gens);
}

}  // namespace kinsila::rep
