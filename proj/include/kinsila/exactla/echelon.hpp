#pragma once

#include "kinsila/exactla/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

namespace kinsila::la {

/// Incremental row reduction. Rows are fed one at a time and reduced
/// against the pivot rows collected so far; only independent rows are kept,
/// so tall redundant systems never grow the working set beyond `width` rows.
class RowReducer {
 public:
  explicit RowReducer(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when `v` was independent of the rows already inserted.
  bool insert(Vec v) {
    if (v.size() != width_) throw std::invalid_argument("row length mismatch");
    reduce_in_place(v);
    std::size_t p = 0;
    while (p < width_ && sgn(v[p]) == 0) ++p;
    if (p == width_) return false;
    normalize(v, p);
    // Keep the stored rows fully reduced on the new pivot column.
    for (auto& [q, row] : rows_) {
      if (sgn(row[p]) != 0) {
        Rational f = row[p];
        for (std::size_t j = p; j < width_; ++j)
          if (sgn(v[j]) != 0) row[j] -= f * v[j];
      }
    }
    rows_.emplace(p, std::move(v));
    return true;
  }

  /// Reduces v modulo the row space; zero result means v is in the span.
  void reduce_in_place(Vec& v) const {
    for (const auto& [p, row] : rows_) {
      if (sgn(v[p]) == 0) continue;
      Rational f = v[p];
      for (std::size_t j = p; j < width_; ++j)
        if (sgn(row[j]) != 0) v[j] -= f * row[j];
    }
  }

  bool in_span(Vec v) const {
    reduce_in_place(v);
    return is_zero(std::span<const Rational>(v));
  }

  /// Rows in reduced echelon form, ordered by pivot column.
  std::vector<Vec> rows() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
  }

 private:
  static void normalize(Vec& v, std::size_t p) {
    if (v[p] == 1) return;
    Rational inv = 1 / v[p];
    for (std::size_t j = p; j < v.size(); ++j)
      if (sgn(v[j]) != 0) v[j] *= inv;
  }

  std::size_t width_;
  std::map<std::size_t, Vec> rows_;
};

struct Echelon {
  Mat reduced;                      // rank x cols, reduced echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

inline Echelon rref(const Mat& m) {
  RowReducer rr(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rr.insert(m.row_vec(i));
  return {Mat::from_rows(m.cols(), rr.rows()), rr.pivots()};
}

inline std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

inline Rational determinant(Mat m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace kinsila::la
