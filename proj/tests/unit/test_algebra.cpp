#include <gtest/gtest.h>

#include "dwcat/classification.hpp"

using namespace dwcat;

namespace {

CategoryPtr dihedral(int m, int p) { return make_category(make_dihedral_odd(m), dihedral_omega_p(m, p)); }
CategoryPtr untwisted(const GroupPtr& G) { return make_category(G, Cochain(G, 3)); }

std::int64_t integer(const CycloSum& c) {
  auto v = c.as_integer();
  EXPECT_TRUE(v.has_value()) << c.str();
  return v.value_or(-1);
}

void expect_rigid(const CenterAlgebra& A, std::int64_t betaA, std::int64_t beta1) {
  auto p = check_algebra(A);
  EXPECT_TRUE(p.rigid) << ::testing::PrintToString(p.failures);
  EXPECT_TRUE(p.rigid_consistent);
  EXPECT_TRUE(p.twist_trivial);
  EXPECT_EQ(p.connected, 1u);
  ASSERT_TRUE(p.beta_A);
  EXPECT_EQ(integer(*p.beta_A), betaA);
  EXPECT_EQ(integer(p.beta_1), beta1);
  EXPECT_EQ(integer(p.qdim), betaA * beta1);
}

struct Flags {
  bool module, assoc, unital, comm, morph;
};
Flags flags_of(const CenterAlgebra& A) {
  auto p = check_algebra(A);
  return {p.module_valid, check_associative(A), check_unital(A), check_commutative(A), p.morphisms};
}

// Z_6 with N = {0, 2, 4}, omega = 0
struct Z6Case {
  CategoryPtr cat = untwisted(make_cyclic(6));
  std::vector<int> N{0, 2, 4};
  TotalCochain2 zero() const { return TotalCochain2(cat->group(), N); }
};

}  // namespace

TEST(Algebra, GroupAlgebraIsAssociative) {
  auto cat = untwisted(make_cyclic(3));
  TotalCochain2 x(cat->group(), {0, 1, 2});
  auto B = build_B(cat, x);
  EXPECT_TRUE(check_associative(B));
  expect_rigid(B, 3, 1);
}

TEST(Algebra, AHStructure) {
  auto cat = dihedral(1, 1);
  auto G = cat->group();
  Subgroup Z3(G, {0, 1, 2});
  auto A = build_AH(cat, Z3);
  EXPECT_EQ(A.dim(), 2u);
  EXPECT_TRUE(check_commutative(A));
  EXPECT_EQ(check_connected(A), 1u);
  EXPECT_EQ(special_scalar(A), CycloSum(1));
  EXPECT_EQ(counit_of_unit(A), CycloSum(2));
  EXPECT_EQ(qdim(A), CycloSum(2));
  expect_rigid(A, 1, 2);

  auto whole = build_AH(cat, Subgroup(G, {0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(whole.dim(), 1u);
  expect_rigid(whole, 1, 1);
  auto fun = build_AH(cat, Subgroup(G, {0}));
  EXPECT_EQ(fun.dim(), 6u);
  expect_rigid(fun, 1, 6);
}

TEST(Algebra, ConnectedIsAdditive) {
  auto cat = dihedral(1, 0);
  auto A = build_AH(cat, Subgroup(cat->group(), {0, 1, 2}));
  CenterAlgebra two{direct_sum(A.obj, A.obj), {}, {}, {}, {}};
  EXPECT_EQ(check_connected(two), 2u);
}

TEST(Algebra, UnitAlgebra) {
  auto cat = dihedral(1, 2);
  TotalCochain2 x(cat->group(), {0});
  auto one = build_B(cat, x);
  EXPECT_EQ(one.dim(), 1u);
  expect_rigid(one, 1, 1);
  EXPECT_EQ(qdim(one), CycloSum(1));
}

TEST(Algebra, BFromSolverIsRigid) {
  for (int p : {0, 3}) {
    auto cat = dihedral(1, p);
    auto G = cat->group();
    for (auto H : {Subgroup(G, {0, 1, 2}), Subgroup(G, {0, 1, 2, 3, 4, 5})}) {
      auto catH = restrict_category(cat, H);
      std::vector<int> N{0, 1, 2};
      auto sol = solve_pairs(*catH, N, default_pair_modulus(*catH, 3));
      ASSERT_TRUE(sol) << p;
      for (const auto& x : dedupe_iso(*sol, catH->group(), N).representatives) {
        auto B = build_B(catH, x);
        EXPECT_EQ(check_connected(B), 1u);
        expect_rigid(B, 3, 1);
      }
    }
  }
}

TEST(Algebra, DihedralWithRotationsTrivialData) {
  auto cat = dihedral(1, 0);
  TotalCochain2 x(cat->group(), {0, 1, 2});
  auto B = build_B(cat, x);
  expect_rigid(B, 3, 1);
  auto A = build_A(cat, Subgroup(cat->group(), {0, 1, 2, 3, 4, 5}), x);
  EXPECT_EQ(integer(qdim(A)), 3);
  EXPECT_FALSE(algebra_difference(A, B).has_value());
}

TEST(Algebra, InducedFromRotations) {
  auto cat = dihedral(1, 0);
  Subgroup Z3(cat->group(), {0, 1, 2});
  auto catH = restrict_category(cat, Z3);
  std::vector<int> N{0, 1, 2};
  auto sol = solve_pairs(*catH, N, 9);
  ASSERT_TRUE(sol);
  for (const auto& x : dedupe_iso(*sol, catH->group(), N).representatives) {
    auto A = build_A(cat, Z3, x);
    EXPECT_EQ(A.dim(), 6u);
    EXPECT_EQ(integer(qdim(A)), 6);
    EXPECT_EQ(integer(counit_of_unit(A)), 2);
    expect_rigid(A, 3, 2);
  }
}

TEST(Algebra, CounitOfUnitIsIndex) {
  for (int p = 0; p < 6; ++p) {
    auto cat = dihedral(1, p);
    for (auto& H : enumerate_subgroups(cat->group())) {
      auto catH = restrict_category(cat, H);
      TotalCochain2 x(catH->group(), {0});
      EXPECT_EQ(integer(counit_of_unit(build_A(cat, H, x))), H.index());
    }
  }
}

TEST(Algebra, ValidationNamesTheCondition) {
  Z6Case c;
  auto x = c.zero();
  x.kappa[1 * 3 + 1] = Phase(1, 3);
  try {
    build_B(c.cat, x);
    FAIL() << "expected a throw";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("kappa-trivializes-omega"), std::string::npos);
  }
}

TEST(AlgebraMutation, BrokenKappaCocycleBreaksAssociativity) {
  Z6Case c;
  auto x = c.zero();
  x.kappa[1 * 3 + 1] = Phase(1, 3);  // symmetric, not a 2-cocycle
  EXPECT_EQ(cocycle_data_violations(*c.cat, x), std::vector<std::string>{"kappa-trivializes-omega"});
  auto f = flags_of(build_B(c.cat, x, false));
  EXPECT_FALSE(f.assoc);
  EXPECT_TRUE(f.module);
  EXPECT_TRUE(f.comm);
  EXPECT_TRUE(f.morph);
}

TEST(AlgebraMutation, BrokenTwistedActionBreaksModule) {
  Z6Case c;
  auto x = c.zero();
  // epsilon_1 a character of N, every other epsilon_h trivial: not a 1-cocycle in h
  for (std::size_t j = 0; j < 3; ++j) x.eps[1 * 3 + j] = Phase(static_cast<std::int64_t>(j), 3);
  EXPECT_EQ(cocycle_data_violations(*c.cat, x), std::vector<std::string>{"epsilon-twisted-action"});
  auto f = flags_of(build_B(c.cat, x, false));
  EXPECT_FALSE(f.module);
  EXPECT_TRUE(f.assoc);
  EXPECT_TRUE(f.unital);
  EXPECT_TRUE(f.comm);
}

TEST(AlgebraMutation, BrokenCompatibilityBreaksMorphisms) {
  Z6Case c;
  auto x = c.zero();
  // epsilon_h(n) = h/2 for n != 1: a homomorphism in h, not multiplicative in n
  for (int h = 0; h < 6; ++h)
    for (std::size_t j = 1; j < 3; ++j) x.eps[static_cast<std::size_t>(h) * 3 + j] = Phase(h, 2);
  EXPECT_EQ(cocycle_data_violations(*c.cat, x), std::vector<std::string>{"epsilon-kappa-compat"});
  auto f = flags_of(build_B(c.cat, x, false));
  EXPECT_FALSE(f.morph);
  EXPECT_TRUE(f.module);
  EXPECT_TRUE(f.assoc);
  EXPECT_TRUE(f.comm);
}

TEST(AlgebraMutation, BrokenBraidedCommutativity) {
  auto cat = untwisted(make_cyclic(3));
  TotalCochain2 x(cat->group(), {0, 1, 2});
  for (int h = 0; h < 3; ++h)
    for (int n = 0; n < 3; ++n) x.eps[static_cast<std::size_t>(h * 3 + n)] = Phase(h * n, 3);
  EXPECT_EQ(cocycle_data_violations(*cat, x), std::vector<std::string>{"commutativity"});
  auto f = flags_of(build_B(cat, x, false));
  EXPECT_FALSE(f.comm);
  EXPECT_TRUE(f.module);
  EXPECT_TRUE(f.assoc);
  EXPECT_TRUE(f.morph);
}

TEST(AlgebraMutation, CorruptedMultiplicationEntry) {
  auto cat = untwisted(make_cyclic(3));
  auto B = build_B(cat, TotalCochain2(cat->group(), {0, 1, 2}));
  LinearMap m(9, 3);
  for (std::size_t s = 0; s < 9; ++s)
    for (const auto& [t, v] : B.mult.column(s)) m.add(s, t, s == 4 ? v.shifted(Phase(1, 3)) : v);
  B.mult = m;
  EXPECT_FALSE(check_associative(B));
}
