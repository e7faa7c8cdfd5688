#pragma once

#include "kinsila/liecore/structure.hpp"

#include <optional>
#include <utility>

namespace kinsila::lie {

/// Linear endomorphism of a Lie algebra, as a matrix on its basis.
struct LinearMap {
  Mat matrix;

  Vec operator()(const Vec& x) const { return matrix * x; }
};

/// First basis pair (i, j) with phi[e_i, e_j] != [phi e_i, phi e_j].
inline std::optional<std::pair<std::size_t, std::size_t>> automorphism_defect(const LieAlgebra& L,
                                                                               const LinearMap& phi) {
  const std::size_t n = L.dim();
  if (phi.matrix.rows() != n || phi.matrix.cols() != n) throw std::invalid_argument("map has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = phi.matrix * L.structure().bracket_basis(i, j);
      Vec rhs = L.bracket(phi.matrix.col(i), phi.matrix.col(j));
      if (lhs != rhs) return std::pair{i, j};
    }
  return std::nullopt;
}

/// Bracket-preserving and invertible.
inline bool is_automorphism(const LieAlgebra& L, const LinearMap& phi) {
  return !automorphism_defect(L, phi) && la::rank(phi.matrix) == L.dim();
}

inline bool is_involution(const LinearMap& phi) {
  return phi.matrix.square() && phi.matrix * phi.matrix == Mat::identity(phi.matrix.rows());
}

/// Linear map equal to +1 on `plus` and -1 on `minus` (a direct-sum decomposition).
inline LinearMap involution_from_split(const Subspace& plus, const Subspace& minus) {
  const std::size_t n = plus.ambient_dim();
  if (plus.dim() + minus.dim() != n || (plus + minus).dim() != n)
    throw std::invalid_argument("eigenspaces do not form a direct sum");
  std::vector<Vec> cols = plus.basis();
  cols.insert(cols.end(), minus.basis().begin(), minus.basis().end());
  const Mat q = Mat::from_columns(n, cols);
  Mat d = Mat::identity(n);
  for (std::size_t k = plus.dim(); k < n; ++k) d(k, k) = -1;
  return {q * d * *la::inverse(q)};
}

struct Quotient {
  LieAlgebra algebra;             // g / ideal on the representative basis
  Mat projection;                 // dim(quotient) x dim(g)
  std::vector<std::size_t> representatives;  // basis indices of g spanning a complement
};

/// g / ideal, with the complement spanned by the standard basis vectors off
/// the ideal's pivot columns.
inline Quotient quotient(const LieAlgebra& L, const Subspace& ideal) {
  if (!is_ideal(L, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  const std::size_t n = L.dim();
  const auto reps = ideal.complement_coordinates();
  const std::size_t m = reps.size();
  std::vector<Vec> cols;
  for (auto r : reps) cols.push_back(la::unit_vec(n, r));
  cols.insert(cols.end(), ideal.basis().begin(), ideal.basis().end());
  const Mat inv = *la::inverse(Mat::from_columns(n, cols));
  Mat proj = inv.block(0, 0, m, n);
  StructureConstants c(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) c.set_bracket(a, b, proj * L.structure().bracket_basis(reps[a], reps[b]));
  std::vector<std::string> labels;
  for (auto r : reps) labels.push_back(L.labels()[r]);
  return {LieAlgebra(std::move(labels), std::move(c)), std::move(proj), reps};
}

}  // namespace kinsila::lie
