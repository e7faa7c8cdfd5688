#include "kinsila/repth.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kinsila;
using namespace kinsila::rep;
namespace kt = kinsila::testing;

namespace {

Rational q(long n, long d = 1) { return la::make_rational(n, d); }

// Abelian one-dimensional algebra acting on Q by a scalar.
Rep scalar_rep(long lambda) { return Rep(1, {Mat{{q(lambda)}}}); }

// 50 random vectors: their orbits must all span the module.
bool all_orbits_full(const Rep& r, std::mt19937& rng) {
  for (int t = 0; t < 50; ++t) {
    Vec v = kt::random_vector(rng, r.dim(), -3, 3);
    if (la::is_zero(std::span<const Rational>(v))) continue;
    if (!spin(r, {v}).is_full()) return false;
  }
  return true;
}

}  // namespace

TEST(Rep, VectorRepIsAHomomorphism) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Rep v = kt::so_vector_rep(n);
    EXPECT_FALSE(homomorphism_defect(*v.algebra(), v));
  }
}

TEST(Rep, RejectsWrongShapes) {
  EXPECT_THROW(Rep(2, {Mat(3, 3)}), std::invalid_argument);
}

TEST(HomSpace, SchurScalarsForSimpleModule) {
  const Rep v = kt::so_vector_rep(4);
  auto h = hom_space(v, v);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], Mat::identity(4));
}

TEST(HomSpace, VectorToTrivialIsZero) {
  const Rep v = kt::so_vector_rep(4);
  EXPECT_TRUE(hom_space(v, trivial_rep(6, 1, v.algebra())).empty());
  EXPECT_TRUE(hom_space(trivial_rep(6, 1, v.algebra()), v).empty());
}

TEST(HomSpace, TwoCopiesToOneHasTwoProjections) {
  const Rep v = kt::so_vector_rep(4);
  const Rep vv = direct_sum(v, v);
  auto h = hom_space(vv, v);
  ASSERT_EQ(h.size(), 2u);
  for (const auto& t : h) EXPECT_TRUE(is_intertwiner(vv, v, t));
}

TEST(HomSpace, MismatchedAlgebraThrows) {
  EXPECT_THROW(hom_space(kt::so_vector_rep(3), kt::so_vector_rep(4)), std::invalid_argument);
}

TEST(Faithful, Examples) {
  EXPECT_FALSE(is_faithful(trivial_rep(3, 2)));
  EXPECT_TRUE(is_faithful(kt::so_vector_rep(4)));
  EXPECT_TRUE(is_faithful(Rep(3, {})));
}

TEST(Simple, OneDimensional) { EXPECT_TRUE(is_simple(scalar_rep(3))); }

TEST(Simple, TwoCopiesAreReducible) {
  const Rep v = kt::so_vector_rep(4);
  const Rep vv = direct_sum(v, v);
  auto c = is_simple(vv);
  EXPECT_EQ(c.verdict, Simplicity::Reducible);
  ASSERT_TRUE(c.invariant_subspace);
  EXPECT_EQ(c.invariant_subspace->dim(), 4u);
  EXPECT_TRUE(is_invariant(vv, *c.invariant_subspace));
}

TEST(Simple, VectorRepOfSo4) {
  const Rep v = kt::so_vector_rep(4);
  auto c = is_simple(v);
  EXPECT_EQ(c.verdict, Simplicity::Simple);
  EXPECT_EQ(c.method, "norton");
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(la::kernel(*c.witness).dim(), 1u);
  EXPECT_EQ(c.commutant_dim, 1u);
  EXPECT_EQ(c.envelope_dim, 16u);
  std::mt19937 rng(23);
  EXPECT_TRUE(all_orbits_full(v, rng));
}

TEST(Simple, RotationPlaneHasComplexCommutant) {
  // so(2) on Q^2: no eigenvectors over Q, commutant Q[i].
  auto c = is_simple(kt::so_vector_rep(2));
  EXPECT_EQ(c.verdict, Simplicity::Simple);
  EXPECT_EQ(c.commutant_dim, 2u);
}

TEST(Simple, TriangularModuleIsReducible) {
  const Rep r(2, {Mat{{0, 1}, {0, 0}}});
  auto c = is_simple(r);
  EXPECT_EQ(c.verdict, Simplicity::Reducible);
  EXPECT_EQ(*c.invariant_subspace, Subspace::coordinate(2, {0}));
}

TEST(Simple, TrivialTwoDimensionalIsReducible) {
  EXPECT_EQ(is_simple(trivial_rep(1, 2)).verdict, Simplicity::Reducible);
}

TEST(Simple, ConjugatedVectorReps) {
  std::mt19937 rng(29);
  for (std::size_t n = 3; n <= 5; ++n) {
    const Rep v = conjugate(kt::so_vector_rep(n), kt::random_invertible(rng, n));
    EXPECT_TRUE(is_simple(v)) << n;
  }
}

TEST(Isotypical, WholeModule) {
  const Rep v = kt::so_vector_rep(4);
  EXPECT_TRUE(isotypical_component(v, v).is_full());
}

TEST(Isotypical, PicksTheVectorSummand) {
  const Rep v = kt::so_vector_rep(4);
  const Rep m = direct_sum(v, trivial_rep(6, 1, v.algebra()));
  EXPECT_EQ(isotypical_component(m, v), Subspace::coordinate(5, {0, 1, 2, 3}));
}

TEST(Isotypical, IntersectionWithSubmodules) {
  // For S a submodule of M: component of V in S equals (component in M) cap S.
  std::mt19937 rng(31);
  const Rep v = kt::so_vector_rep(4);
  const Rep triv = trivial_rep(6, 2, v.algebra());
  const Rep m0 = direct_sum(direct_sum(v, v), triv);
  const Rep m = conjugate(m0, kt::random_invertible(rng, 10));
  const Subspace full_component = isotypical_component(m, v);
  ASSERT_EQ(full_component.dim(), 8u);
  // Submodules as images of random intertwiners from V + trivial into M.
  const Rep src = direct_sum(v, trivial_rep(6, 1, v.algebra()));
  const auto homs = hom_space(src, m);
  ASSERT_FALSE(homs.empty());
  for (int t = 0; t < 50; ++t) {
    Mat f(m.dim(), src.dim());
    for (const auto& h : homs) f = f + kt::random_int(rng, -2, 2) * h;
    const Subspace s = la::image(f);
    ASSERT_TRUE(is_invariant(m, s));
    if (s.is_zero()) continue;
    const Subspace local = isotypical_component(restrict(m, s), v);
    std::vector<Vec> lifted;
    for (const auto& x : local.basis()) lifted.push_back(s.combine(x));
    EXPECT_EQ(Subspace::span(m.dim(), lifted), full_component.intersect(s));
  }
}

TEST(Decomposition, SimpleModuleIsItself) {
  const Rep v = kt::so_vector_rep(4);
  auto d = simple_decomposition(v);
  ASSERT_TRUE(d);
  ASSERT_EQ(d->size(), 1u);
  EXPECT_TRUE(d->front().is_full());
}

TEST(Decomposition, BlockDiagonal) {
  const Rep v = kt::so_vector_rep(4);
  const Rep vv = direct_sum(v, v);
  auto d = simple_decomposition(vv);
  ASSERT_TRUE(d);
  ASSERT_EQ(d->size(), 2u);
  EXPECT_EQ(((*d)[0] + (*d)[1]).dim(), 8u);
}

TEST(Decomposition, RandomizedConjugates) {
  std::mt19937 rng(37);
  const Rep v = kt::so_vector_rep(4);
  const Rep vv = direct_sum(v, v);
  for (int t = 0; t < 20; ++t) {
    const Rep m = conjugate(vv, kt::random_invertible(rng, 8));
    auto d = simple_decomposition(m);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->size(), 2u);
    std::size_t total = 0;
    Subspace sum = Subspace::zero(8);
    for (const auto& s : *d) {
      EXPECT_TRUE(is_simple(restrict(m, s)));
      total += s.dim();
      sum = sum + s;
    }
    EXPECT_EQ(total, 8u);
    EXPECT_TRUE(sum.is_full());
  }
}

TEST(Decomposition, NonIsotypicFails) {
  const Rep v = kt::so_vector_rep(4);
  EXPECT_FALSE(simple_decomposition(direct_sum(v, trivial_rep(6, 1, v.algebra()))));
}

TEST(Matching, DecompositionsRelatedByCommutant) {
  std::mt19937 rng(41);
  const Rep v = kt::so_vector_rep(4);
  const Rep vv = direct_sum(v, v);
  for (int t = 0; t < 5; ++t) {
    const Mat p = kt::random_invertible(rng, 8);
    const Rep m = conjugate(vv, p);
    auto a = simple_decomposition(m);
    ASSERT_TRUE(a);
    const Mat c = p * kt::random_commutant_element(rng, 4) * *la::inverse(p);
    ASSERT_TRUE(is_intertwiner(m, m, c));
    std::vector<Subspace> b;
    for (const auto& s : *a) b.push_back(s.image_under(c));
    auto match = match_decompositions(m, *a, b);
    ASSERT_TRUE(match);
    EXPECT_TRUE(is_intertwiner(m, m, match->map));
  }
}

TEST(Forms, EuclideanFormForRotations) {
  auto f = invariant_symmetric_forms(kt::so_vector_rep(4));
  ASSERT_EQ(f.basis.size(), 1u);
  ASSERT_TRUE(f.witness);
  EXPECT_EQ(*f.witness, Mat::identity(4));
}

TEST(Forms, ScalarActionHasNone) {
  auto f = invariant_symmetric_forms(scalar_rep(2));
  EXPECT_TRUE(f.basis.empty());
  EXPECT_FALSE(f.witness);
  EXPECT_TRUE(f.proven_degenerate);
}

TEST(Forms, TrivialRepAllowsEverything) {
  auto f = invariant_symmetric_forms(trivial_rep(2, 3));
  EXPECT_EQ(f.basis.size(), 6u);
  ASSERT_TRUE(f.witness);
  EXPECT_EQ(*f.witness, Mat::identity(3));
}

TEST(Forms, DegenerateFamilyIsProven) {
  // x = E_12: invariance forces B = [[0,0],[0,b]].
  const Rep r(2, {Mat{{0, 1}, {0, 0}}});
  auto f = invariant_symmetric_forms(r);
  EXPECT_EQ(f.basis.size(), 1u);
  EXPECT_FALSE(f.witness);
  EXPECT_TRUE(f.proven_degenerate);
}

TEST(Wedge, SmallCases) {
  EXPECT_EQ(wedge_square(Rep(1, {Mat{{q(5)}}})).dim(), 0u);
  const Rep w = wedge_square(trivial_rep(1, 2));
  EXPECT_EQ(w.dim(), 1u);
  EXPECT_TRUE(w.action(0).is_zero());
}

TEST(Wedge, So4VectorHasNoCopyOfV) {
  const Rep v = kt::so_vector_rep(4);
  const Rep w = wedge_square(v);
  EXPECT_EQ(w.dim(), 6u);
  EXPECT_FALSE(homomorphism_defect(*v.algebra(), w));
  EXPECT_TRUE(hom_space(v, w).empty());
  EXPECT_TRUE(isotypical_component(w, v).is_zero());
}

TEST(Wedge, So3VectorIsItsOwnExteriorSquare) {
  const Rep v = kt::so_vector_rep(3);
  EXPECT_EQ(hom_space(v, wedge_square(v)).size(), 1u);
}

TEST(Wedge, InducedFormIsPreserved) {
  std::mt19937 rng(43);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 3 + t % 3;
    const Mat p = kt::random_invertible(rng, n);
    const Rep v = conjugate(kt::so_vector_rep(n), p);
    const Mat pi = *la::inverse(p);
    const Mat b = pi.transpose() * pi;  // transported Euclidean form
    ASSERT_TRUE(preserves_form(v, b));
    EXPECT_TRUE(preserves_form(wedge_square(v), wedge_form(b)));
  }
}

TEST(Commutant, Examples) {
  const Rep v = kt::so_vector_rep(4);
  EXPECT_EQ(commutant(v).size(), 1u);
  EXPECT_EQ(commutant(direct_sum(v, v)).size(), 4u);
  EXPECT_EQ(commutant(trivial_rep(3, 2)).size(), 4u);
}
