#pragma once

#include "kinsila/exactla/poly.hpp"
#include "kinsila/exactla/subspace.hpp"

#include <stdexcept>

namespace kinsila::la {

namespace detail {
inline void require_square(const Mat& m, const char* what) {
  if (!m.square()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}
}  // namespace detail

/// Characteristic polynomial det(tI - m) by the Faddeev-LeVerrier recursion.
inline Poly char_poly(const Mat& m) {
  detail::require_square(m, "char_poly");
  const std::size_t n = m.rows();
  Vec c = zero_vec(n + 1);
  c[n] = 1;
  const Mat id = Mat::identity(n);
  Mat mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return Poly(std::move(c));
}

/// Minimal polynomial: the first linear dependency among I, m, m^2, ...
inline Poly min_poly(const Mat& m) {
  detail::require_square(m, "min_poly");
  const std::size_t n = m.rows();
  if (n == 0) return Poly{1};
  std::vector<Vec> powers;
  Mat p = Mat::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    // Solve p = sum_{j<k} a_j m^j over the flattened powers.
    if (k > 0) {
      Mat a = Mat::from_columns(n * n, powers);
      if (auto sol = solve(a, p.flat())) {
        Vec c = zero_vec(k + 1);
        c[k] = 1;
        for (std::size_t j = 0; j < k; ++j) c[j] = -sol->particular[j];
        return Poly(std::move(c));
      }
    }
    powers.push_back(p.flat());
    p = p * m;
  }
  throw std::logic_error("min_poly: Cayley-Hamilton bound exceeded");
}

inline bool is_semisimple(const Mat& m) { return is_squarefree(min_poly(m)); }

inline bool is_nilpotent(const Mat& m) {
  const Poly mp = min_poly(m);
  return mp == Poly::monomial(static_cast<std::size_t>(mp.degree()));
}

struct SNParts {
  Mat semisimple;
  Mat nilpotent;
};

/// Jordan-Chevalley decomposition m = S + N over Q. Newton iteration on the
/// squarefree part p of the characteristic polynomial:
///   S <- S - p(S) p'(S)^{-1}
/// converges in O(log n) steps and keeps S inside Q[m].
inline SNParts sn_decomposition(const Mat& m) {
  detail::require_square(m, "sn_decomposition");
  const std::size_t n = m.rows();
  const Poly p = squarefree_part(char_poly(m));
  const Poly dp = p.derivative();
  Mat s = m;
  for (std::size_t iter = 0; iter <= 2 * n + 2; ++iter) {
    Mat ps = p(s);
    if (ps.is_zero()) return {s, m - s};
    auto inv = inverse(dp(s));
    if (!inv) throw std::logic_error("sn_decomposition: p'(S) singular");
    s = s - ps * *inv;
  }
  throw std::logic_error("sn_decomposition: Newton iteration did not converge");
}

/// Span of I, m, ..., m^{n-1}, as flattened n*n vectors.
inline Subspace polynomial_span(const Mat& m) {
  detail::require_square(m, "polynomial_span");
  const std::size_t n = m.rows();
  std::vector<Vec> powers;
  Mat p = Mat::identity(n);
  for (std::size_t k = 0; k < std::max<std::size_t>(n, 1); ++k) {
    powers.push_back(p.flat());
    p = p * m;
  }
  return Subspace::span(n * n, powers);
}

inline bool is_polynomial_in(const Mat& x, const Mat& m) { return polynomial_span(m).contains(x.flat()); }

}  // namespace kinsila::la
