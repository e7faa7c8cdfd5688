#pragma once

#include "kinsila/repth/hom.hpp"

#include <functional>
#include <string>

namespace kinsila::rep {

enum class Simplicity { Simple, Reducible, Undetermined };

constexpr std::string_view to_string(Simplicity s) {
  switch (s) {
    case Simplicity::Simple: return "simple";
    case Simplicity::Reducible: return "reducible";
    case Simplicity::Undetermined: return "undetermined";
  }
  return "undetermined";
}

struct SimplicityCertificate {
  Simplicity verdict = Simplicity::Undetermined;
  std::string method;
  std::optional<Mat> witness;                  // enveloping-algebra element with a one-dimensional kernel
  std::optional<Subspace> invariant_subspace;  // proper and nonzero, when reducible
  std::size_t envelope_dim = 0;
  std::size_t commutant_dim = 0;

  explicit operator bool() const { return verdict == Simplicity::Simple; }
};

/// Basis of the associative algebra generated by the identity and the action
/// matrices (words in the generators, kept when independent).
inline std::vector<Mat> enveloping_algebra(const Rep& r) {
  const std::size_t n = r.dim();
  la::RowReducer rr(n * n);
  std::vector<Mat> words;
  std::deque<Mat> todo;
  Mat id = Mat::identity(n);
  rr.insert(id.flat());
  words.push_back(id);
  todo.push_back(std::move(id));
  while (!todo.empty() && rr.rank() < n * n) {
    Mat w = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : r.action()) {
      Mat x = g * w;
      if (rr.insert(x.flat())) {
        words.push_back(x);
        todo.push_back(std::move(x));
      }
    }
  }
  return words;
}

/// Upper bound on the number of enveloping-algebra elements tried by the
/// irreducibility test before it falls back on dimension counts.
inline constexpr std::size_t kNortonBudget = 20000;

/// Deterministic element schedule: the generators, combinations
/// x_a^2 + c x_b^2 of squares, all pairwise products, shifts of generators
/// and products by small multiples of the identity, then pairwise sums
/// X + cY, always with c in {1, -1, 2, -2}. `visit` returns true to stop.
inline void for_each_norton_candidate(const Rep& r, const std::function<bool(const Mat&)>& visit) {
  std::vector<Mat> base = r.action();
  for (const auto& a : r.action())
    for (const auto& b : r.action()) base.push_back(a * b);
  const Mat id = Mat::identity(r.dim());
  static constexpr int coeffs[] = {1, -1, 2, -2};
  std::size_t budget = kNortonBudget;
  auto offer = [&](const Mat& m) { return budget-- == 0 || visit(m); };
  const std::size_t g = r.generators();
  for (std::size_t a = 0; a < g; ++a)
    if (offer(base[a])) return;
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = a + 1; b < g; ++b)
      for (int c : coeffs)
        if (offer(base[g + a * g + a] + Rational(c) * base[g + b * g + b])) return;
  for (std::size_t a = g; a < base.size(); ++a)
    if (offer(base[a])) return;
  for (const auto& x : base)
    for (int c : coeffs)
      if (offer(x + Rational(c) * id)) return;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j)
      for (int c : coeffs)
        if (offer(base[i] + Rational(c) * base[j])) return;
}

/// Irreducibility over Q.
///
/// Norton's criterion: for a singular element theta of the enveloping
/// algebra, the module is simple iff every nonzero kernel vector of theta
/// spins to the whole space and some nonzero kernel vector of theta^T spins
/// to the whole dual. Only nullity-one elements certify simplicity (then
/// "every" is a single check); any proper spin is a reducibility certificate.
///
/// If the schedule is exhausted: a singular nonzero intertwiner has an
/// invariant kernel; otherwise dim E = n^2 (Burnside) or a quadratic field
/// commutant with dim E = n^2/2 certifies simplicity. Anything else is
/// reported as undetermined.
inline SimplicityCertificate is_simple(const Rep& r) {
  const std::size_t n = r.dim();
  if (n == 0) throw std::invalid_argument("is_simple: zero-dimensional module");
  SimplicityCertificate out;
  if (n == 1) {
    out.verdict = Simplicity::Simple;
    out.method = "dimension one";
    out.envelope_dim = 1;
    out.commutant_dim = 1;
    return out;
  }
  std::vector<Mat> transposes;
  for (const auto& m : r.action()) transposes.push_back(m.transpose());

  for_each_norton_candidate(r, [&](const Mat& theta) {
    const Subspace k = la::kernel(theta);
    if (k.is_zero() || k.is_full()) return false;
    // One kernel vector each side; with nullity one that is all of them.
    Subspace s = spin(r, {k.basis().front()});
    if (!s.is_full()) {
      out.verdict = Simplicity::Reducible;
      out.method = "spin of a kernel vector";
      out.invariant_subspace = std::move(s);
      return true;
    }
    const Subspace kt = la::kernel(theta.transpose());
    const Subspace st = spin(n, transposes, {kt.basis().front()});
    if (!st.is_full()) {
      out.verdict = Simplicity::Reducible;
      out.method = "annihilator of a dual spin";
      out.invariant_subspace = la::kernel_of_rows(n, st.basis());
      return true;
    }
    if (k.dim() == 1) {
      out.verdict = Simplicity::Simple;
      out.method = "norton";
      out.witness = theta;
      return true;
    }
    return false;
  });

  if (out.verdict == Simplicity::Reducible) return out;
  const auto comm = commutant(r);
  const auto env = enveloping_algebra(r);
  out.commutant_dim = comm.size();
  out.envelope_dim = env.size();
  if (out.verdict == Simplicity::Simple) return out;

  // A singular nonzero intertwiner has an invariant kernel.
  for (const auto& c : comm)
    for (int shift : {0, 1, -1, 2, -2}) {
      Subspace k = la::kernel(c + Rational(shift) * Mat::identity(n));
      if (!k.is_zero() && !k.is_full()) {
        out.verdict = Simplicity::Reducible;
        out.method = "kernel of an intertwiner";
        out.invariant_subspace = std::move(k);
        return out;
      }
    }

  if (env.size() == n * n) {
    out.verdict = Simplicity::Simple;
    out.method = "burnside";
    return out;
  }
  if (comm.size() == 2 && 2 * env.size() == n * n) {
    // Commutant Q[c]; it is a field iff the minimal polynomial of the
    // non-scalar basis element is an irreducible quadratic.
    for (const auto& c : comm) {
      const la::Poly mp = la::min_poly(c);
      if (mp.degree() != 2) continue;
      const Rational b = mp.coeff(1), a0 = mp.coeff(0);
      const Rational disc = b * b - 4 * a0;
      if (!la::rational_sqrt(disc)) {
        out.verdict = Simplicity::Simple;
        out.method = "commutant field";
        return out;
      }
    }
  }
  out.method = "undetermined";
  return out;
}

/// A simple submodule, found by descending through invariant-subspace
/// certificates. Throws Unsupported when simplicity cannot be decided.
inline Subspace simple_submodule(const Rep& m) {
  Subspace cur = Subspace::full(m.dim());
  while (true) {
    const auto cert = is_simple(restrict(m, cur));
    if (cert.verdict == Simplicity::Simple) return cur;
    if (cert.verdict == Simplicity::Undetermined) throw Unsupported("simple_submodule: simplicity undetermined");
    std::vector<Vec> lifted;
    for (const auto& v : cert.invariant_subspace->basis()) lifted.push_back(cur.combine(v));
    cur = Subspace::span(m.dim(), lifted);
  }
}

/// Decomposition of an isotypic module into simple summands: the images of
/// a basis of hom(S, M) for one simple submodule S, kept greedily while the
/// sum stays direct. nullopt when those images do not fill M (M is not
/// S-isotypic).
inline std::optional<std::vector<Subspace>> simple_decomposition(const Rep& m) {
  if (m.dim() == 0) return std::vector<Subspace>{};
  const Subspace s = simple_submodule(m);
  const Rep rs = restrict(m, s);
  std::vector<Subspace> summands{s};
  Subspace sum = s;
  for (const auto& t : hom_space(rs, m)) {
    if (sum.is_full()) break;
    Subspace img = la::image(t);
    if (img.dim() != s.dim()) continue;
    Subspace next = sum + img;
    if (next.dim() != sum.dim() + img.dim()) continue;
    summands.push_back(std::move(img));
    sum = std::move(next);
  }
  if (!sum.is_full()) return std::nullopt;
  return summands;
}

/// Projections onto each summand along the others.
inline std::vector<Mat> summand_projections(const std::vector<Subspace>& parts) {
  if (parts.empty()) return {};
  const std::size_t n = parts.front().ambient_dim();
  std::vector<Vec> cols;
  for (const auto& p : parts) cols.insert(cols.end(), p.basis().begin(), p.basis().end());
  if (cols.size() != n) throw std::invalid_argument("summand_projections: not a direct sum");
  const Mat q = Mat::from_columns(n, cols);
  const auto qi = la::inverse(q);
  if (!qi) throw std::invalid_argument("summand_projections: not a direct sum");
  std::vector<Mat> out;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    Mat d(n, n);
    for (std::size_t k = 0; k < p.dim(); ++k) d(offset + k, offset + k) = 1;
    out.push_back(q * d * *qi);
    offset += p.dim();
  }
  return out;
}

struct Matching {
  std::vector<std::size_t> permutation;  // summand i of the first decomposition -> summand of the second
  Mat map;                               // intertwiner carrying each first summand onto its partner
};

/// Given two decompositions M = S_1 + ... + S_r = S'_1 + ... + S'_r' into
/// simple submodules, the projections pi_ij : S_i -> S'_j along the other
/// S'_k are intertwiners, and some permutation tau makes every pi_{i,tau(i)}
/// an isomorphism. Returns that permutation and the assembled intertwiner
/// sum_i pi_{i,tau(i)} (projection onto S_i), verified invertible.
inline std::optional<Matching> match_decompositions(const Rep& m, const std::vector<Subspace>& a,
                                                    const std::vector<Subspace>& b) {
  const std::size_t r = a.size();
  if (b.size() != r) return std::nullopt;
  const auto pa = summand_projections(a), pb = summand_projections(b);
  std::vector<std::vector<bool>> iso(r, std::vector<bool>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      iso[i][j] = a[i].dim() == b[j].dim() && la::rank(pb[j] * a[i].basis_matrix()) == a[i].dim();

  std::vector<std::size_t> perm(r);
  std::vector<bool> used(r);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == r) return true;
    for (std::size_t j = 0; j < r; ++j) {
      if (used[j] || !iso[i][j]) continue;
      used[j] = true;
      perm[i] = j;
      if (place(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;

  Mat map(m.dim(), m.dim());
  for (std::size_t i = 0; i < r; ++i) map = map + pb[perm[i]] * pa[i];
  if (!is_intertwiner(m, m, map) || la::rank(map) != m.dim()) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i)
    if (a[i].image_under(map) != b[perm[i]]) return std::nullopt;
  return Matching{std::move(perm), std::move(map)};
}

}  // namespace kinsila::rep
