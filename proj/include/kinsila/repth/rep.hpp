#pragma once

#include "kinsila/liecore.hpp"

#include <deque>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kinsila::rep {

using la::Mat;
using la::Rational;
using la::Subspace;
using la::Vec;
using la::operator+;
using la::operator-;
using la::operator*;

/// Finite-dimensional representation: one matrix per basis element of the
/// acting algebra. The algebra itself is optional; when present it is used
/// to check the homomorphism property and to match representations.
class Rep {
 public:
  Rep() = default;

  Rep(std::size_t dim, std::vector<Mat> action, std::shared_ptr<const lie::LieAlgebra> algebra = nullptr)
      : dim_(dim), action_(std::move(action)), algebra_(std::move(algebra)) {
    for (const auto& m : action_)
      if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("Rep: action matrix has wrong shape");
    if (algebra_ && algebra_->dim() != action_.size())
      throw std::invalid_argument("Rep: one action matrix per basis element is required");
  }

  std::size_t dim() const { return dim_; }
  std::size_t generators() const { return action_.size(); }
  const std::vector<Mat>& action() const { return action_; }
  const Mat& action(std::size_t i) const { return action_.at(i); }
  const std::shared_ptr<const lie::LieAlgebra>& algebra() const { return algebra_; }

  Vec act(std::size_t i, const Vec& v) const { return action_.at(i) * v; }

  /// Image of an algebra element given by coordinates.
  Mat of(const Vec& x) const {
    if (x.size() != action_.size()) throw std::invalid_argument("Rep::of: coordinate length mismatch");
    Mat m(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (sgn(x[i]) != 0) m = m + x[i] * action_[i];
    return m;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Mat> action_;
  std::shared_ptr<const lie::LieAlgebra> algebra_;
};

/// True when both representations are of the same algebra (same generator
/// count, and equal structure constants when both carry the algebra).
inline bool same_algebra(const Rep& a, const Rep& b) {
  if (a.generators() != b.generators()) return false;
  if (a.algebra() && b.algebra()) return *a.algebra() == *b.algebra();
  return true;
}

/// First basis pair (i, j) with rho[e_i, e_j] != [rho e_i, rho e_j].
inline std::optional<std::pair<std::size_t, std::size_t>> homomorphism_defect(const lie::LieAlgebra& s,
                                                                               const Rep& r) {
  if (s.dim() != r.generators()) throw std::invalid_argument("homomorphism_defect: generator count mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (r.of(s.structure().bracket_basis(i, j)) != la::commutator(r.action(i), r.action(j))) return std::pair{i, j};
  return std::nullopt;
}

inline Rep trivial_rep(std::size_t generators, std::size_t dim,
                       std::shared_ptr<const lie::LieAlgebra> algebra = nullptr) {
  return Rep(dim, std::vector<Mat>(generators, Mat(dim, dim)), std::move(algebra));
}

inline Rep direct_sum(const Rep& a, const Rep& b) {
  if (!same_algebra(a, b)) throw std::invalid_argument("direct_sum: different acting algebras");
  const std::size_t n = a.dim() + b.dim();
  std::vector<Mat> act;
  for (std::size_t k = 0; k < a.generators(); ++k) {
    Mat m(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.action(k)(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.action(k)(i, j);
    act.push_back(std::move(m));
  }
  return Rep(n, std::move(act), a.algebra() ? a.algebra() : b.algebra());
}

/// x -> g rho(x) g^-1.
inline Rep conjugate(const Rep& r, const Mat& g) {
  auto gi = la::inverse(g);
  if (!gi) throw std::invalid_argument("conjugate: matrix is singular");
  std::vector<Mat> act;
  for (const auto& m : r.action()) act.push_back(g * m * *gi);
  return Rep(r.dim(), std::move(act), r.algebra());
}

/// Contragredient: x -> -rho(x)^T.
inline Rep dual(const Rep& r) {
  std::vector<Mat> act;
  for (const auto& m : r.action()) act.push_back(Rational(-1) * m.transpose());
  return Rep(r.dim(), std::move(act), r.algebra());
}

inline bool is_invariant(const Rep& r, const Subspace& w) {
  for (const auto& m : r.action())
    if (!w.invariant_under(m)) return false;
  return true;
}

/// Action on an invariant subspace, in the coordinates of its echelon basis.
inline Rep restrict(const Rep& r, const Subspace& w) {
  const std::size_t k = w.dim();
  std::vector<Mat> act;
  for (const auto& m : r.action()) {
    Mat a(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto c = w.coordinates(m * w.basis()[j]);
      if (!c) throw std::invalid_argument("restrict: subspace is not invariant");
      for (std::size_t i = 0; i < k; ++i) a(i, j) = (*c)[i];
    }
    act.push_back(std::move(a));
  }
  return Rep(k, std::move(act), r.algebra());
}

/// Smallest subspace containing `seeds` and stable under every matrix in `ops`.
inline Subspace spin(std::size_t n, const std::vector<Mat>& ops, const std::vector<Vec>& seeds) {
  la::RowReducer rr(n);
  std::deque<Vec> todo;
  for (const auto& v : seeds)
    if (rr.insert(v)) todo.push_back(v);
  while (!todo.empty()) {
    Vec v = std::move(todo.front());
    todo.pop_front();
    for (const auto& m : ops) {
      Vec w = m * v;
      if (rr.insert(w)) todo.push_back(std::move(w));
      if (rr.rank() == n) return Subspace::full(n);
    }
  }
  return Subspace::span(n, rr.rows());
}

inline Subspace spin(const Rep& r, const std::vector<Vec>& seeds) { return spin(r.dim(), r.action(), seeds); }

}  // namespace kinsila::rep
