#include "kinsila/catalog.hpp"
#include "kinsila/kinematics.hpp"

#include <gtest/gtest.h>

using namespace kinsila;
using namespace kinsila::kin;
using catalog::Family;

namespace {

Rational q(long n, long d = 1) { return la::make_rational(n, d); }

struct Input {
  std::shared_ptr<const LieAlgebra> algebra;
  Subspace z, s, p;
};

Input from_roles(const LieAlgebra& L, const catalog::Roles& roles) {
  auto alg = std::make_shared<const LieAlgebra>(L);
  return {alg, catalog::role_subspace(L, roles.z), catalog::role_subspace(L, roles.s),
          catalog::role_subspace(L, roles.p)};
}

Input catalog_input(Family f, std::size_t d) {
  const auto a = catalog::make_algebra(f, d);
  return from_roles(a.algebra, a.roles);
}

KinTriple triple(Family f, std::size_t d) {
  const auto in = catalog_input(f, d);
  auto v = validate(in.algebra, in.z, in.s, in.p);
  EXPECT_TRUE(v.ok()) << catalog::to_string(f) << " " << d;
  return *v.triple;
}

SymplecticData symplectic(const KinTriple& t) {
  auto sd = omega_and_radical(t);
  z_action_split(sd);
  return sd;
}

Subspace span_of(const LieAlgebra& L, const std::vector<Vec>& vs) { return Subspace::span(L.dim(), vs); }

/// Static algebra at dimension d with extra brackets set by label.
LieAlgebra modified_static(std::size_t d, const std::vector<std::tuple<std::string, std::string, Vec>>& brackets) {
  const auto base = catalog::make_algebra(Family::Static, d).algebra;
  lie::StructureConstants c = base.structure();
  for (const auto& [x, y, v] : brackets) c.set_bracket(*base.index_of(x), *base.index_of(y), v);
  return LieAlgebra(base.labels(), c);
}

}  // namespace

TEST(Validate, PoincareFourIsValid) {
  const auto t = triple(Family::Poincare, 4);
  EXPECT_EQ(t.v_rep.dim(), 4u);
  EXPECT_EQ(t.summands.size(), 2u);
  EXPECT_EQ(t.wedge_hom_dim, 0u);
  EXPECT_EQ(t.commutant_dim, 1u);
}

TEST(Validate, EveryItemPassesOnValidInput) {
  const auto in = catalog_input(Family::DeSitter, 4);
  const auto v = validate(in.algebra, in.z, in.s, in.p);
  ASSERT_TRUE(v.ok());
  for (const auto& item : v.items) EXPECT_EQ(item.status, CheckStatus::Pass) << item.check;
}

TEST(Validate, PoincareThreeFailsWedgeCondition) {
  const auto in = catalog_input(Family::Poincare, 3);
  const auto v = validate(in.algebra, in.z, in.s, in.p);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(*v.failure, Failure::WedgeConditionFails);
  for (const auto& item : v.items)
    if (item.code == Failure::WedgeConditionFails) {
      EXPECT_NE(item.detail.find("= 1"), std::string::npos);
    }
}

TEST(Validate, TwoDimensionalZIsAShapeError) {
  const auto in = catalog_input(Family::Poincare, 4);
  const LieAlgebra& L = *in.algebra;
  const Subspace z2 = in.z + span_of(L, {L.basis_vector("P4")});
  const Subspace p = catalog::role_subspace(L, {"B1", "B2", "B3", "B4", "P1", "P2", "P3"});
  const auto v = validate(in.algebra, z2, in.s, p);
  EXPECT_EQ(*v.failure, Failure::ZNotLine);
  for (const auto& item : v.items)
    if (item.code == Failure::PNotTwoCopies || item.code == Failure::VNotSimple) {
      EXPECT_EQ(item.status, CheckStatus::Skipped);
    }
}

TEST(Validate, AmbientMismatch) {
  const auto in = catalog_input(Family::Poincare, 4);
  const auto v = validate(in.algebra, Subspace::full(1), in.s, in.p);
  EXPECT_EQ(*v.failure, Failure::ShapeMismatch);
}

TEST(Validate, MissingDirectionIsNotADirectSum) {
  const auto in = catalog_input(Family::Poincare, 4);
  const auto p = catalog::role_subspace(*in.algebra, {"B1", "B2", "B3", "B4", "P1", "P2", "P3"});
  EXPECT_EQ(*validate(in.algebra, in.z, in.s, p).failure, Failure::NotDirectSum);
}

TEST(Validate, BoostLineDoesNotCentralize) {
  const auto in = catalog_input(Family::Poincare, 4);
  const LieAlgebra& L = *in.algebra;
  const auto z = catalog::role_subspace(L, {"B1"});
  const auto p = catalog::role_subspace(L, {"H", "B2", "B3", "B4", "P1", "P2", "P3", "P4"});
  EXPECT_EQ(*validate(in.algebra, z, in.s, p).failure, Failure::ZNotCentralizing);
}

TEST(Validate, NonSubalgebra) {
  const auto in = catalog_input(Family::Poincare, 4);
  const LieAlgebra& L = *in.algebra;
  const auto s = catalog::role_subspace(L, {"J12", "J13", "J14", "J23", "J24", "B1"});
  const auto p = catalog::role_subspace(L, {"J34", "B2", "B3", "B4", "P1", "P2", "P3", "P4"});
  EXPECT_EQ(*validate(in.algebra, in.z, s, p).failure, Failure::SNotSubalgebra);
}

TEST(Validate, NonIsotypicP) {
  // s = so(2) + so(2) on the (12) and (34) planes: P splits into two types.
  const auto in = catalog_input(Family::Galilei, 4);
  const LieAlgebra& L = *in.algebra;
  const auto s = catalog::role_subspace(L, {"J12", "J34"});
  const auto p = catalog::role_subspace(L, {"B1", "B2", "B3", "B4", "P1", "P2", "P3", "P4", "J13", "J14", "J23", "J24"});
  const auto v = validate(in.algebra, in.z, s, p);
  EXPECT_FALSE(v.ok());
  EXPECT_EQ(*v.failure, Failure::PNotTwoCopies);
  const auto p8 = catalog::role_subspace(L, {"B1", "B2", "B3", "B4", "P1", "P2", "P3", "P4"});
  const auto s6 = catalog::role_subspace(L, {"J12", "J34", "J13", "J14", "J23", "J24"});
  EXPECT_TRUE(validate(in.algebra, in.z, s6, p8).ok());
}

TEST(Validate, SmallRotationAlgebraGivesReduciblePlanes) {
  // so(2) on the (12) plane of R^4 fixes e3 and e4.
  const auto base = catalog::make_algebra(Family::Static, 4).algebra;
  const auto sub = catalog::role_subspace(base, {"J12", "B1", "B2", "B3", "B4", "P1", "P2", "P3", "P4", "H"});
  auto alg = std::make_shared<const LieAlgebra>(subalgebra_on_basis(base, sub));
  const LieAlgebra& L = *alg;
  const auto v = validate(alg, catalog::role_subspace(L, {"H"}), catalog::role_subspace(L, {"J12"}),
                          catalog::role_subspace(L, {"B1", "B2", "B3", "B4", "P1", "P2", "P3", "P4"}));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(*v.failure, Failure::PNotTwoCopies);
}

TEST(Involution, VerifiedOnPoincareAndCarroll) {
  for (Family f : {Family::Poincare, Family::Carroll}) {
    const auto t = triple(f, 4);
    const auto inv = canonical_involution(t);
    EXPECT_TRUE(inv.automorphism);
    EXPECT_TRUE(inv.involutive);
    EXPECT_TRUE(inv.inclusions);
    EXPECT_TRUE(lie::is_automorphism(t.g(), inv.sigma));
    EXPECT_TRUE(lie::is_involution(inv.sigma));
    EXPECT_EQ(la::kernel(inv.sigma.matrix - Mat::identity(t.g().dim())), t.h());
  }
}

TEST(Involution, AbelianAlgebraAnySplit) {
  // so(2) acting on two planes; with every bracket zero except the rotation
  // action, sigma is trivially an automorphism.
  const auto L = modified_static(2, {});
  auto alg = std::make_shared<const LieAlgebra>(L);
  const auto v = validate(alg, catalog::role_subspace(L, {"H"}), catalog::role_subspace(L, {"J12"}),
                          catalog::role_subspace(L, {"B1", "B2", "P1", "P2"}));
  ASSERT_TRUE(v.ok());
  EXPECT_TRUE(canonical_involution(*v.triple).automorphism);
}

TEST(Omega, CarrollIsStandardSymplectic) {
  const auto t = triple(Family::Carroll, 4);
  const auto sd = omega_and_radical(t);
  Mat expect(8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    expect(i, 4 + i) = 1;
    expect(4 + i, i) = -1;
  }
  EXPECT_EQ(sd.omega, expect);
  EXPECT_TRUE(sd.radical.is_zero());
}

TEST(Omega, GalileiRadicalIsP) {
  const auto t = triple(Family::Galilei, 4);
  const auto sd = omega_and_radical(t);
  EXPECT_TRUE(sd.omega.is_zero());
  EXPECT_EQ(sd.radical, t.p);
}

TEST(Omega, PoincareNondegenerate) {
  const auto t = triple(Family::Poincare, 4);
  EXPECT_TRUE(omega_and_radical(t).radical.is_zero());
}

TEST(Omega, InvariantAndRadicalStableOnCatalog) {
  for (Family f : catalog::all_families) {
    const auto t = triple(f, 4);
    const auto sd = omega_and_radical(t);
    const LieAlgebra& L = t.g();
    std::vector<Vec> hb{t.z0};
    hb.insert(hb.end(), t.s.basis().begin(), t.s.basis().end());
    for (const auto& x : hb) {
      const Mat m = restricted_matrix(L.ad(x), t.p, t.p);
      EXPECT_TRUE((m.transpose() * sd.omega + sd.omega * m).is_zero());
      EXPECT_TRUE(sd.radical.invariant_under(L.ad(x)));
    }
    EXPECT_TRUE(t.s.contains(lie::bracket_span(L, sd.radical, t.p)));
  }
}

TEST(Transvection, GalileiIsFlatWithNoBrackets) {
  const auto tr = transvection_and_holonomy(triple(Family::Galilei, 4));
  EXPECT_TRUE(tr.pp.is_zero());
  EXPECT_TRUE(tr.flat);
}

TEST(Transvection, CarrollHolonomyVanishes) {
  const auto t = triple(Family::Carroll, 4);
  const auto tr = transvection_and_holonomy(t);
  EXPECT_EQ(tr.pp, t.z);
  EXPECT_EQ(tr.n, t.z);
  EXPECT_EQ(tr.holonomy_dim, 0u);
  EXPECT_TRUE(tr.flat);
}

TEST(Transvection, PoincareHolonomy) {
  const auto tr = transvection_and_holonomy(triple(Family::Poincare, 4));
  EXPECT_EQ(tr.pp.dim(), 7u);
  EXPECT_EQ(tr.n.dim(), 0u);
  EXPECT_EQ(tr.holonomy_dim, 7u);
  EXPECT_FALSE(tr.flat);
  EXPECT_FALSE(tr.solvable);
}

TEST(ZAction, PoincareSquaresToZero) {
  const auto sd = symplectic(triple(Family::Poincare, 4));
  EXPECT_EQ(sd.z_action, ZAction::Nilpotent);
  EXPECT_FALSE(sd.a.is_zero());
  EXPECT_TRUE((sd.a * sd.a).is_zero());
  EXPECT_TRUE(sd.s_part.is_zero());
}

TEST(ZAction, DeSitterSemisimpleUnitSquare) {
  const auto sd = symplectic(triple(Family::DeSitter, 4));
  EXPECT_EQ(sd.z_action, ZAction::Semisimple);
  EXPECT_EQ(sd.a * sd.a, Mat::identity(8));
}

TEST(ZAction, CarrollZero) { EXPECT_EQ(symplectic(triple(Family::Carroll, 4)).z_action, ZAction::Zero); }

TEST(ZAction, SplitIsPureOnCatalog) {
  for (std::size_t d : {4u, 5u})
    for (Family f : catalog::all_families) {
      const auto sd = symplectic(triple(f, d));
      EXPECT_TRUE(sd.s_part.is_zero() || sd.n_part.is_zero()) << catalog::to_string(f);
      EXPECT_EQ(sd.s_part + sd.n_part, sd.a);
    }
}

TEST(Kahler, DeSitterParaSplit) {
  const auto t = triple(Family::DeSitter, 4);
  const auto k = kahler_split(t, symplectic(t));
  EXPECT_EQ(k.kind, KahlerKind::Para);
  EXPECT_EQ(k.mu, q(1));
  ASSERT_TRUE(k.l && k.lbar);
  const LieAlgebra& L = t.g();
  // With [H, B_i] = -P_i and [H, P_i] = -B_i the +1 eigenvectors are B_i - P_i.
  std::vector<Vec> minus, plus;
  for (int i = 1; i <= 4; ++i) {
    const Vec b = L.basis_vector("B" + std::to_string(i)), p = L.basis_vector("P" + std::to_string(i));
    minus.push_back(b - p);
    plus.push_back(b + p);
  }
  EXPECT_EQ(*k.l, span_of(L, minus));
  EXPECT_EQ(*k.lbar, span_of(L, plus));
  EXPECT_TRUE(lie::is_abelian(L, *k.l));
  EXPECT_TRUE(lie::is_abelian(L, *k.lbar));
  EXPECT_EQ(la::rank(*k.pairing), 4u);
}

TEST(Kahler, AntiDeSitterPseudo) {
  const auto t = triple(Family::AntiDeSitter, 4);
  const auto sd = symplectic(t);
  const auto k = kahler_split(t, sd);
  EXPECT_EQ(k.kind, KahlerKind::Pseudo);
  EXPECT_EQ(k.mu, q(-1));
  EXPECT_EQ(sd.a * sd.a, q(-1) * Mat::identity(8));
  EXPECT_FALSE(k.l.has_value());
}

TEST(Kahler, ZeroActionRejected) {
  const auto t = triple(Family::Carroll, 4);
  EXPECT_THROW(kahler_split(t, symplectic(t)), std::invalid_argument);
}

TEST(Poincare, AllItemsPassAtFour) {
  const auto t = triple(Family::Poincare, 4);
  const auto inv = canonical_involution(t);
  const auto sd = symplectic(t);
  const auto pc = poincare_certificate(t, inv, sd, transvection_and_holonomy(t));
  for (const auto& c : pc.items) EXPECT_TRUE(c.holds) << c.name;
  EXPECT_TRUE(pc.passed);
  const LieAlgebra& L = t.g();
  EXPECT_EQ(pc.radical->dim(), 5u);
  EXPECT_EQ(*pc.p_r, catalog::role_subspace(L, {"P1", "P2", "P3", "P4"}));
  EXPECT_EQ(*pc.p_l, catalog::role_subspace(L, {"B1", "B2", "B3", "B4"}));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const Vec b = L.bracket(L.basis_vector("B" + std::to_string(i)), L.basis_vector("P" + std::to_string(j)));
      EXPECT_EQ(b, i == j ? L.basis_vector("H") : la::zero_vec(L.dim()));
    }
}

TEST(Poincare, GatesRejectCarrollAndGalilei) {
  for (Family f : {Family::Carroll, Family::Galilei}) {
    const auto t = triple(f, 4);
    EXPECT_THROW(poincare_certificate(t, canonical_involution(t), symplectic(t), transvection_and_holonomy(t)),
                 std::invalid_argument);
  }
}

TEST(Classify, CatalogLabelsAtFour) {
  for (Family f : catalog::all_families) {
    const auto r = classify(triple(f, 4));
    EXPECT_EQ(r.label, *catalog::expected_label(f, 4)) << catalog::to_string(f);
  }
}

TEST(Classify, CertificatesCarryTheirData) {
  const auto ds = classify(triple(Family::DeSitter, 4));
  ASSERT_NE(ds.find("L"), nullptr);
  ASSERT_NE(ds.find("g_0"), nullptr);
  EXPECT_EQ(std::get<Subspace>(ds.find("g_0")->value).dim(), 7u);
  const auto gal = classify(triple(Family::Galilei, 4));
  EXPECT_TRUE(std::get<Subspace>(gal.find("[P, P]")->value).is_zero());
  EXPECT_EQ(gal.decomposability, "decomposable");
  const auto car = classify(triple(Family::Carroll, 4));
  EXPECT_EQ(car.decomposability, "not determined");
  const auto poi = classify(triple(Family::Poincare, 4));
  EXPECT_EQ(poi.decomposability, "indecomposable");
}

TEST(Classify, HeisenbergFactor) {
  // so(2) on R^2 twice; [P1, P2] = H makes Z + span(P) a Heisenberg algebra
  // and the boosts span rad(Omega).
  const auto L = modified_static(2, {{"P1", "P2", {q(0), q(0), q(0), q(0), q(0), q(1)}}});
  auto alg = std::make_shared<const LieAlgebra>(L);
  const auto a = analyze(alg, catalog::role_subspace(L, {"H"}), catalog::role_subspace(L, {"J12"}),
                         catalog::role_subspace(L, {"B1", "B2", "P1", "P2"}));
  ASSERT_TRUE(a.report);
  EXPECT_EQ(a.report->label, Label::FlatHeisenberg);
  EXPECT_EQ(std::get<Subspace>(a.report->find("D")->value), catalog::role_subspace(L, {"B1", "B2"}));
  EXPECT_EQ(a.validation.triple->commutant_dim, 2u);
  EXPECT_FALSE(a.report->warnings.empty());
}

TEST(Classify, MixedActionWithFullRadical) {
  // [H, B_i] = B_i + P_i, [H, P_i] = P_i: S = id and N != 0 on P, allowed
  // because Omega vanishes.
  std::vector<std::tuple<std::string, std::string, Vec>> br;
  const auto base = catalog::make_algebra(Family::Static, 4).algebra;
  for (int i = 1; i <= 4; ++i) {
    const Vec b = base.basis_vector("B" + std::to_string(i)), p = base.basis_vector("P" + std::to_string(i));
    br.emplace_back("H", "B" + std::to_string(i), b + p);
    br.emplace_back("H", "P" + std::to_string(i), p);
  }
  const auto L = modified_static(4, br);
  const auto in = from_roles(L, catalog::make_algebra(Family::Static, 4).roles);
  const auto a = analyze(in.algebra, in.z, in.s, in.p);
  ASSERT_TRUE(a.report);
  EXPECT_EQ(a.report->symplectic.z_action, ZAction::Mixed);
  EXPECT_EQ(a.report->label, Label::FlatRadEqualsP);
}
