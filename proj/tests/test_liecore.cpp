#include "kinsila/catalog/families.hpp"
#include "kinsila/liecore.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kinsila;
using namespace kinsila::lie;
namespace kt = kinsila::testing;

namespace {

Rational q(long n, long d = 1) { return la::make_rational(n, d); }

LieAlgebra heisenberg() {
  StructureConstants c(3);
  c.set_bracket(0, 1, {q(0), q(0), q(1)});
  return LieAlgebra({"X", "Y", "Z0"}, c);
}

Subspace labels_span(const LieAlgebra& L, const std::vector<std::string>& labels) {
  std::vector<Vec> v;
  for (const auto& l : labels) v.push_back(L.basis_vector(l));
  return Subspace::span(L.dim(), v);
}

// so(4) on its own, from the rotation block of the Poincare realization.
LieAlgebra so4() {
  auto g = catalog::realization(catalog::Family::Poincare, 4);
  return LieAlgebra({"J12", "J13", "J14", "J23", "J24", "J34"}, structure_from_matrices(g.rotations));
}

}  // namespace

TEST(Bracket, HeisenbergDefiningRelation) {
  const auto h = heisenberg();
  EXPECT_EQ(h.bracket(h.basis_vector("X"), h.basis_vector("Y")), h.basis_vector("Z0"));
  EXPECT_EQ(h.bracket(h.basis_vector("Y"), h.basis_vector("X")), q(-1) * h.basis_vector("Z0"));
}

TEST(Bracket, SelfBracketVanishes) {
  const auto p = catalog::make_algebra(catalog::Family::Poincare, 4).algebra;
  std::mt19937 rng(1);
  for (int t = 0; t < 10; ++t) {
    Vec x = kt::random_vector(rng, p.dim());
    EXPECT_TRUE(la::is_zero(std::span<const Rational>(p.bracket(x, x))));
  }
}

TEST(Bracket, PoincareBoostTranslation) {
  const auto p = catalog::make_algebra(catalog::Family::Poincare, 4).algebra;
  EXPECT_EQ(p.bracket(p.basis_vector("B1"), p.basis_vector("P1")), p.basis_vector("H"));
  EXPECT_TRUE(la::is_zero(std::span<const Rational>(p.bracket(p.basis_vector("B1"), p.basis_vector("P2")))));
}

TEST(Bracket, LengthMismatchThrows) {
  const auto h = heisenberg();
  EXPECT_THROW(h.bracket(Vec(2), Vec(3)), std::invalid_argument);
}

TEST(Jacobi, AbelianHasNoDefect) { EXPECT_FALSE(jacobi_defect(LieAlgebra::abelian({"a", "b", "c"}))); }

TEST(Jacobi, SignErrorIsReported) {
  // [e1,e2] = e1, [e2,e3] = e3 is a Lie algebra; adding [e1,e3] = e1 breaks it:
  // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = e1 + e1 - e1 = e1.
  StructureConstants c(3);
  c.set_bracket(0, 1, {q(1), q(0), q(0)});
  c.set_bracket(1, 2, {q(0), q(0), q(1)});
  EXPECT_FALSE(jacobi_defect(c));
  c.set_bracket(0, 2, {q(1), q(0), q(0)});
  auto bad = jacobi_defect(c);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->i, 0u);
  EXPECT_EQ(bad->j, 1u);
  EXPECT_EQ(bad->k, 2u);
  EXPECT_EQ(bad->defect, (Vec{q(1), q(0), q(0)}));
  EXPECT_THROW(LieAlgebra({"e1", "e2", "e3"}, c), InvalidLieAlgebra);
}

TEST(Jacobi, CatalogAlgebrasHaveNoDefect) {
  for (auto f : catalog::all_families) EXPECT_FALSE(jacobi_defect(catalog::make_algebra(f, 4).algebra));
}

TEST(LieAlgebra, RejectsNonAntisymmetricAndDuplicateLabels) {
  StructureConstants c(2);
  c(0, 1, 0) = 1;
  EXPECT_THROW(LieAlgebra({"a", "b"}, c), InvalidLieAlgebra);
  EXPECT_THROW(LieAlgebra::abelian({"a", "a"}), InvalidLieAlgebra);
}

TEST(Closure, FullSpaceIsFixed) {
  const auto h = heisenberg();
  EXPECT_TRUE(subalgebra_closure(h, Subspace::full(3)).is_full());
}

TEST(Closure, HeisenbergGeneratedByXY) {
  const auto h = heisenberg();
  EXPECT_TRUE(subalgebra_closure(h, labels_span(h, {"X", "Y"})).is_full());
}

TEST(Closure, PoincareTranslationsAndBoostsGenerateEverything) {
  const auto e = catalog::make_algebra(catalog::Family::Poincare, 4);
  const Subspace p = labels_span(e.algebra, e.roles.p);
  const Subspace closure = subalgebra_closure(e.algebra, p);
  // [P,P] = span(J_ab, H), so the closure is [P,P] + P = everything.
  EXPECT_EQ(closure.dim(), 15u);
  EXPECT_EQ(closure, bracket_span(e.algebra, p, p) + p);
}

TEST(Centralizer, OfZeroIsWithin) {
  const auto h = heisenberg();
  EXPECT_EQ(centralizer(h, Subspace::zero(3), labels_span(h, {"X", "Z0"})), labels_span(h, {"X", "Z0"}));
}

TEST(Centralizer, HeisenbergCenter) {
  const auto h = heisenberg();
  EXPECT_EQ(center(h), labels_span(h, {"Z0"}));
}

TEST(Centralizer, CarrollTimeIsCentral) {
  const auto e = catalog::make_algebra(catalog::Family::Carroll, 4);
  const Subspace p = labels_span(e.algebra, e.roles.p);
  const Subspace pp = bracket_span(e.algebra, p, p);
  EXPECT_EQ(pp, labels_span(e.algebra, {"H"}));
  EXPECT_EQ(centralizer(e.algebra, p, pp), pp);
}

TEST(Radical, SemisimpleHasZeroRadical) {
  const auto s = so4();
  EXPECT_TRUE(solvable_radical(s).is_zero());
  EXPECT_NE(la::determinant(killing_form(s)), 0);
}

TEST(Radical, AbelianIsItsOwnRadical) {
  EXPECT_TRUE(solvable_radical(LieAlgebra::abelian({"a", "b"})).is_full());
}

TEST(Radical, PoincareRadicalIsTimeAndTranslations) {
  const auto p = catalog::make_algebra(catalog::Family::Poincare, 4).algebra;
  const Subspace r = solvable_radical(p);
  EXPECT_EQ(r, labels_span(p, {"H", "P1", "P2", "P3", "P4"}));
  EXPECT_TRUE(is_ideal(p, r));
  EXPECT_TRUE(is_solvable(p, r));
  EXPECT_TRUE(is_abelian(p, r));
}

TEST(Radical, AlwaysAnIdealAndSolvable) {
  for (auto f : catalog::all_families) {
    const auto L = catalog::make_algebra(f, 4).algebra;
    const Subspace r = solvable_radical(L);
    EXPECT_TRUE(is_ideal(L, r)) << catalog::to_string(f);
    EXPECT_TRUE(is_solvable(L, r)) << catalog::to_string(f);
  }
}

TEST(Levi, SemisimpleIsWholeAlgebra) {
  auto l = levi_complement(so4());
  ASSERT_TRUE(l);
  EXPECT_TRUE(l->is_full());
}

TEST(Levi, AbelianGivesZero) {
  auto l = levi_complement(LieAlgebra::abelian({"a", "b", "c"}));
  ASSERT_TRUE(l);
  EXPECT_TRUE(l->is_zero());
}

TEST(Levi, PoincareComplementsTheRadical) {
  const auto p = catalog::make_algebra(catalog::Family::Poincare, 4).algebra;
  auto l = levi_complement(p);
  ASSERT_TRUE(l);
  const Subspace r = solvable_radical(p);
  EXPECT_EQ(l->dim(), 10u);
  EXPECT_TRUE(is_subalgebra(p, *l));
  EXPECT_EQ((*l + r).dim(), p.dim());
  EXPECT_TRUE(solvable_radical(quotient(p, r).algebra).is_zero());
}

TEST(Levi, ShiftedComplementIsCorrected) {
  // Tilt the Poincare basis so the naive complement of the radical is not a subalgebra.
  const auto e = catalog::make_algebra(catalog::Family::Poincare, 4);
  const auto& p = e.algebra;
  std::vector<Vec> tilted;
  for (std::size_t i = 0; i < 10; ++i) {
    Vec v = p.basis_vector(i);
    v = v + q(static_cast<long>(i % 3) + 1) * p.basis_vector("P" + std::to_string(1 + i % 4));
    tilted.push_back(v);
  }
  for (std::size_t i = 10; i < 15; ++i) tilted.push_back(p.basis_vector(i));
  const Mat c = Mat::from_columns(15, tilted);
  const Mat ci = *la::inverse(c);
  StructureConstants sc(15);
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t j = i + 1; j < 15; ++j) sc.set_bracket(i, j, ci * p.bracket(tilted[i], tilted[j]));
  const LieAlgebra t(p.labels(), sc);
  EXPECT_FALSE(is_subalgebra(t, Subspace::coordinate(15, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9})));
  auto l = levi_complement(t);
  ASSERT_TRUE(l);
  EXPECT_TRUE(is_subalgebra(t, *l));
  EXPECT_EQ((*l + solvable_radical(t)).dim(), 15u);
}

TEST(Levi, NonAbelianRadicalIsUnsupported) {
  EXPECT_THROW(levi_complement(heisenberg()), Unsupported);
}

TEST(Automorphism, IdentityAndMinusIdentity) {
  const auto h = heisenberg();
  EXPECT_TRUE(is_automorphism(h, {Mat::identity(3)}));
  EXPECT_TRUE(is_involution({Mat::identity(3)}));
  const auto a = LieAlgebra::abelian({"a", "b"});
  const LinearMap minus{q(-1) * Mat::identity(2)};
  EXPECT_TRUE(is_automorphism(a, minus));
  EXPECT_TRUE(is_involution(minus));
  EXPECT_FALSE(is_automorphism(h, {q(-1) * Mat::identity(3)}));
}

TEST(Automorphism, PoincareCanonicalInvolution) {
  const auto e = catalog::make_algebra(catalog::Family::Poincare, 4);
  auto rest = e.roles.s;
  rest.insert(rest.end(), e.roles.z.begin(), e.roles.z.end());
  const LinearMap sigma = involution_from_split(labels_span(e.algebra, rest), labels_span(e.algebra, e.roles.p));
  EXPECT_TRUE(is_automorphism(e.algebra, sigma));
  EXPECT_TRUE(is_involution(sigma));
}

TEST(Quotient, ByZeroIsACopy) {
  const auto h = heisenberg();
  auto qt = quotient(h, Subspace::zero(3));
  EXPECT_EQ(qt.algebra, h);
  EXPECT_EQ(qt.projection, Mat::identity(3));
}

TEST(Quotient, ByWholeIsZero) { EXPECT_EQ(quotient(heisenberg(), Subspace::full(3)).algebra.dim(), 0u); }

TEST(Quotient, HeisenbergModCenterIsAbelian) {
  const auto h = heisenberg();
  auto qt = quotient(h, center(h));
  EXPECT_EQ(qt.algebra.dim(), 2u);
  EXPECT_EQ(qt.algebra, LieAlgebra::abelian({"X", "Y"}));
}

TEST(Quotient, RejectsNonIdeal) {
  const auto h = heisenberg();
  EXPECT_THROW(quotient(h, labels_span(h, {"X"})), std::invalid_argument);
}

TEST(Quotient, ProjectionIsAHomomorphism) {
  const auto p = catalog::make_algebra(catalog::Family::Poincare, 4).algebra;
  const Subspace r = solvable_radical(p);
  auto qt = quotient(p, r);
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    Vec x = kt::random_vector(rng, p.dim(), -3, 3), y = kt::random_vector(rng, p.dim(), -3, 3);
    EXPECT_EQ(qt.projection * p.bracket(x, y), qt.algebra.bracket(qt.projection * x, qt.projection * y));
  }
}
