#pragma once

#include "kinsila/exactla/echelon.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace kinsila::la {

/// Linear subspace of Q^n. The basis is kept in reduced echelon form, which
/// is a canonical representative: equal spaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

  static Subspace full(std::size_t ambient) {
    std::vector<Vec> b;
    for (std::size_t i = 0; i < ambient; ++i) b.push_back(unit_vec(ambient, i));
    return span(ambient, b);
  }

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
    RowReducer rr(ambient);
    for (const auto& v : vectors) rr.insert(v);
    Subspace s(ambient);
    s.basis_ = rr.rows();
    s.pivots_ = rr.pivots();
    return s;
  }

  /// Span of the standard basis vectors with the given indices.
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
    std::vector<Vec> b;
    for (auto i : indices) b.push_back(unit_vec(ambient, i));
    return span(ambient, b);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Columns are the basis vectors.
  Mat basis_matrix() const { return Mat::from_columns(ambient_, basis_); }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector not in ambient space");
    // With a reduced basis the only candidate combination uses v's pivot entries.
    Vec r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational c = v[pivots_[k]];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (sgn(basis_[k][j]) != 0) r[j] -= c * basis_[k][j];
    }
    return la::is_zero(std::span<const Rational>(r));
  }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  /// Coefficients of v with respect to basis(), if v lies in the space.
  std::optional<Vec> coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
  }

  Vec combine(const Vec& coeffs) const {
    if (coeffs.size() != basis_.size()) throw std::invalid_argument("coefficient count mismatch");
    Vec v = zero_vec(ambient_);
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (sgn(coeffs[k]) != 0)
        for (std::size_t j = 0; j < ambient_; ++j) v[j] += coeffs[k] * basis_[k][j];
    return v;
  }

  Subspace operator+(const Subspace& other) const {
    check_ambient(other);
    std::vector<Vec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
  }

  Subspace intersect(const Subspace& other) const;

  /// Standard basis vectors completing this space to the ambient space.
  std::vector<std::size_t> complement_coordinates() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (k < pivots_.size() && pivots_[k] == j) {
        ++k;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

  /// Image of the space under a linear map given by its matrix.
  Subspace image_under(const Mat& m) const {
    if (m.cols() != ambient_) throw std::invalid_argument("map does not act on this space");
    std::vector<Vec> imgs;
    for (const auto& v : basis_) imgs.push_back(m * v);
    return span(m.rows(), imgs);
  }

  bool invariant_under(const Mat& m) const {
    for (const auto& v : basis_)
      if (!contains(m * v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Subspace& s) {
    os << "span{";
    for (std::size_t k = 0; k < s.basis_.size(); ++k) {
      os << (k ? ", (" : "(");
      for (std::size_t j = 0; j < s.ambient_; ++j) os << (j ? "," : "") << s.basis_[k][j];
      os << ')';
    }
    return os << "} in Q^" << s.ambient_;
  }

 private:
  void check_ambient(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspaces live in different ambient spaces");
  }

  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
inline Subspace kernel(const Mat& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

/// Kernel of a linear system supplied row by row; `rows` may be very tall.
inline Subspace kernel_of_rows(std::size_t n, const std::vector<Vec>& rows) {
  RowReducer rr(n);
  for (const auto& r : rows) rr.insert(r);
  return kernel(Mat::from_rows(n, rr.rows()));
}

/// Column space of m.
inline Subspace image(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace::span(m.rows(), cols);
}

inline Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(other);
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  // a in A, b in B with sum_i x_i a_i - sum_j y_j b_j = 0.
  const std::size_t na = dim(), nb = other.dim();
  Mat m(ambient_, na + nb);
  for (std::size_t i = 0; i < ambient_; ++i) {
    for (std::size_t k = 0; k < na; ++k) m(i, k) = basis_[k][i];
    for (std::size_t k = 0; k < nb; ++k) m(i, na + k) = -other.basis_[k][i];
  }
  std::vector<Vec> out;
  const Subspace k = kernel(m);
  for (const auto& sol : k.basis()) out.push_back(combine(Vec(sol.begin(), sol.begin() + na)));
  return span(ambient_, out);
}

struct Solution {
  Vec particular;
  Subspace homogeneous;
};

/// All x with m x = b, or nullopt when inconsistent.
inline std::optional<Solution> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t n = m.cols();
  Mat aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vec x = zero_vec(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  return Solution{std::move(x), kernel(m)};
}

inline std::optional<Mat> inverse(const Mat& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Mat(0, 0);
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

}  // namespace kinsila::la
