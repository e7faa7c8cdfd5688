#pragma once

#include "kinsila/exactla/matrix.hpp"

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kinsila::la {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rational& a) { return Poly(Vec{a}); }
  /// t^k
  static Poly monomial(std::size_t k, const Rational& a = 1) {
    Vec c = zero_vec(k + 1);
    c[k] = a;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Vec& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Poly monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return inv * *this;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    Vec d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
  }

  Rational operator()(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  /// Horner evaluation at a square matrix.
  Mat operator()(const Mat& m) const {
    if (!m.square()) throw std::invalid_argument("polynomial evaluated at non-square matrix");
    Mat r(m.rows(), m.cols());
    const Mat id = Mat::identity(m.rows());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * m + *it * id;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Vec c = zero_vec(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }
  friend Poly operator*(const Rational& s, const Poly& a) {
    Vec c = a.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Vec c = zero_vec(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Vec r = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    Vec q = zero_vec(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lb = b.leading();
    for (int k = a.degree(); k >= db; --k) {
      const Rational f = r[static_cast<std::size_t>(k)] / lb;
      q[static_cast<std::size_t>(k - db)] = f;
      if (sgn(f) == 0) continue;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Rational& a = c_[static_cast<std::size_t>(k)];
      if (sgn(a) == 0) continue;
      Rational mag = abs(a);
      os << (sgn(a) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (k == 0 || mag != 1) os << mag;
      if (k > 0) os << (k == 0 || mag != 1 ? "*" : "") << var;
      if (k > 1) os << '^' << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  Vec c_;
};

inline Poly poly_mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/// Monic greatest common divisor (zero when both inputs are zero).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'), made monic: same roots, each with multiplicity one.
inline Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

inline bool is_squarefree(const Poly& p) { return p.is_zero() ? false : gcd(p, p.derivative()).degree() == 0; }

}  // namespace kinsila::la
