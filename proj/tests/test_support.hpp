#pragma once

// Deterministic random generators shared by the unit and acceptance suites.

#include "kinsila/exactla.hpp"
#include "kinsila/repth.hpp"

#include <random>

namespace kinsila::testing {

using la::Mat;
using la::Rational;
using la::Vec;

inline Rational random_int(std::mt19937& rng, int lo, int hi) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline Mat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -5, int hi = 5) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_int(rng, lo, hi);
  return m;
}

inline Vec random_vector(std::mt19937& rng, std::size_t n, int lo = -5, int hi = 5) {
  Vec v(n);
  for (auto& x : v) x = random_int(rng, lo, hi);
  return v;
}

/// Unit lower-triangular times unit upper-triangular: always invertible,
/// with a rational inverse of modest height.
inline Mat random_invertible(std::mt19937& rng, std::size_t n, int lo = -2, int hi = 2) {
  Mat l = Mat::identity(n), u = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_int(rng, lo, hi);
      u(j, i) = random_int(rng, lo, hi);
    }
  return l * u;
}

/// Matrix with prescribed repeated eigenvalues and Jordan blocks, conjugated
/// into a dense basis. Exercises the non-semisimple branch of the
/// Jordan-Chevalley decomposition, which uniformly random matrices almost
/// never reach.
inline Mat random_jordan_type(std::mt19937& rng, std::size_t n) {
  Mat j(n, n);
  std::size_t i = 0;
  while (i < n) {
    const std::size_t block = std::min<std::size_t>(n - i, 1 + std::uniform_int_distribution<std::size_t>(0, 2)(rng));
    const Rational lambda = random_int(rng, -2, 2);
    for (std::size_t k = 0; k < block; ++k) {
      j(i + k, i + k) = lambda;
      if (k + 1 < block) j(i + k, i + k + 1) = 1;
    }
    i += block;
  }
  // Occasionally glue in an irrational pair via a 2x2 companion block.
  if (n >= 2 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    j(0, 0) = 0;
    j(0, 1) = 1;
    j(1, 0) = 2;
    j(1, 1) = 0;
  }
  const Mat p = random_invertible(rng, n);
  return p * j * *la::inverse(p);
}

/// so(n) on Q^n with generators E_ba - E_ab (a < b).
inline rep::Rep so_vector_rep(std::size_t n) {
  std::vector<Mat> gens;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Mat m(n, n);
      m(b, a) = 1;
      m(a, b) = -1;
      gens.push_back(std::move(m));
      labels.push_back("J" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
    }
  auto alg = std::make_shared<const lie::LieAlgebra>(labels, lie::structure_from_matrices(gens));
  return rep::Rep(n, std::move(gens), std::move(alg));
}

/// Random element of the commutant of V + V when End(V) = Q: kron(g, I).
inline Mat random_commutant_element(std::mt19937& rng, std::size_t vdim) {
  const Mat g = random_invertible(rng, 2);
  Mat out(2 * vdim, 2 * vdim);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t i = 0; i < vdim; ++i) out(a * vdim + i, b * vdim + i) = g(a, b);
  return out;
}

}  // namespace kinsila::testing
