#pragma once

#include "kinsila/errors.hpp"
#include "kinsila/exactla.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace kinsila::lie {

using la::Mat;
using la::Rational;
using la::Subspace;
using la::Vec;
// Vec is a std::vector, so its arithmetic is not found by ADL.
using la::operator+;
using la::operator-;
using la::operator*;

/// Raw, unvalidated structure-constant tensor: [e_i, e_j] = sum_k c(i,j,k) e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v) {
    for (std::size_t k = 0; k < dim_; ++k) {
      (*this)(i, j, k) = v[k];
      (*this)(j, i, k) = -v[k];
    }
  }

  Vec bracket_basis(std::size_t i, std::size_t j) const {
    Vec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
    return v;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: vector length mismatch");
    Vec r = la::zero_vec(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (sgn(y[j]) == 0) continue;
        Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (sgn((*this)(i, j, k)) != 0) r[k] += xy * (*this)(i, j, k);
      }
    }
    return r;
  }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_ = 0;
  Vec c_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vec defect;  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

/// Scans all basis triples i<j<k; returns the violation with the most
/// nonzero defect entries (first such in lexicographic order), or nullopt
/// when the Jacobi identity holds exactly.
inline std::optional<JacobiViolation> jacobi_defect(const StructureConstants& c) {
  const std::size_t n = c.dim();
  std::optional<JacobiViolation> worst;
  std::size_t worst_support = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec d = c.bracket(la::unit_vec(n, i), c.bracket_basis(j, k)) +
                c.bracket(la::unit_vec(n, j), c.bracket_basis(k, i)) +
                c.bracket(la::unit_vec(n, k), c.bracket_basis(i, j));
        std::size_t support = 0;
        for (const auto& x : d) support += sgn(x) != 0;
        if (support > worst_support) {
          worst_support = support;
          worst = JacobiViolation{i, j, k, std::move(d)};
        }
      }
  return worst;
}

/// First (i, j, k) with c(i,j,k) != -c(j,i,k), if any.
inline std::optional<std::array<std::size_t, 3>> antisymmetry_defect(const StructureConstants& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k)) return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Construction validates antisymmetry and the Jacobi identity exactly.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  LieAlgebra(std::vector<std::string> labels, StructureConstants c) : labels_(std::move(labels)), c_(std::move(c)) {
    if (labels_.size() != c_.dim()) throw InvalidLieAlgebra("label count does not match dimension");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw InvalidLieAlgebra("basis labels are not distinct");
    if (auto bad = antisymmetry_defect(c_))
      throw InvalidLieAlgebra("structure constants not antisymmetric at [" + labels_[(*bad)[0]] + ", " +
                              labels_[(*bad)[1]] + "]");
    if (auto bad = jacobi_defect(c_))
      throw InvalidLieAlgebra("Jacobi identity fails on (" + labels_[bad->i] + ", " + labels_[bad->j] + ", " +
                              labels_[bad->k] + ")");
    const std::size_t n = dim();
    ad_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Mat a(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) a(k, j) = c_(i, j, k);
      ad_.push_back(std::move(a));
    }
    for (std::size_t i = 0; i < n; ++i) index_.emplace(labels_[i], i);
  }

  /// Abelian algebra with the given labels.
  static LieAlgebra abelian(std::vector<std::string> labels) {
    StructureConstants c(labels.size());
    return LieAlgebra(std::move(labels), std::move(c));
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureConstants& structure() const { return c_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Vec basis_vector(std::size_t i) const { return la::unit_vec(dim(), i); }
  Vec basis_vector(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw std::invalid_argument("unknown basis label '" + label + "'");
    return basis_vector(*i);
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("bracket: vector length mismatch");
    Vec r = la::zero_vec(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(x[i]) == 0) continue;
      r = r + x[i] * (ad_[i] * y);
    }
    return r;
  }

  /// Matrix of ad_{e_i} (column j holds [e_i, e_j]).
  const Mat& ad_basis(std::size_t i) const { return ad_.at(i); }

  Mat ad(const Vec& x) const {
    if (x.size() != dim()) throw std::invalid_argument("ad: vector length mismatch");
    Mat m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (sgn(x[i]) != 0) m = m + x[i] * ad_[i];
    return m;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.c_ == b.c_;
  }

 private:
  std::vector<std::string> labels_;
  StructureConstants c_;
  std::vector<Mat> ad_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline std::optional<JacobiViolation> jacobi_defect(const LieAlgebra& L) { return jacobi_defect(L.structure()); }

/// Structure constants of the span of the given matrices under commutator,
/// read off by exact linear solves. Throws if the span is not closed.
inline StructureConstants structure_from_matrices(const std::vector<Mat>& basis) {
  const std::size_t n = basis.size();
  if (n == 0) return StructureConstants(0);
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(b.flat());
  const std::size_t width = flat.front().size();
  const Mat coords = Mat::from_columns(width, flat);
  // n independent entry positions; the square system on them is solved once.
  const auto rows = la::rref(coords.transpose()).pivots;
  if (rows.size() != n) throw InvalidLieAlgebra("matrix realization: generators are linearly dependent");
  Mat square(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) square(r, k) = coords(rows[r], k);
  const Mat inv = *la::inverse(square);
  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mat m = la::commutator(basis[i], basis[j]);
      const Vec& comm = m.flat();
      Vec rhs(n);
      for (std::size_t r = 0; r < n; ++r) rhs[r] = comm[rows[r]];
      const Vec x = inv * rhs;
      if (coords * x != comm) throw InvalidLieAlgebra("matrix realization: span not closed under commutator");
      c.set_bracket(i, j, x);
    }
  return c;
}

}  // namespace kinsila::lie
