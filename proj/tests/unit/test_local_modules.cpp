#include <gtest/gtest.h>

#include <random>

#include "dwcat/classification.hpp"
#include "dwcat/induction.hpp"
#include "dwcat/local_modules.hpp"

using namespace dwcat;

namespace {

CategoryPtr dihedral(int m, int p) { return make_category(make_dihedral_odd(m), dihedral_omega_p(m, p)); }

using R = boost::rational<std::int64_t>;

}  // namespace

TEST(LocalModules, InducedModulesAreLocal) {
  std::mt19937_64 rng(3);
  for (int p : {0, 1, 3}) {
    auto cat = dihedral(1, p);
    for (auto& H : enumerate_subgroups(cat->group())) {
      Induction I(cat, H);
      for (int t = 0; t < 3; ++t) {
        auto L = induced_module(I, random_module(I.source(), rng, 2));
        EXPECT_TRUE(check_module(L).ok());
        EXPECT_TRUE(is_local(L));
      }
    }
  }
}

namespace {

// objects of reflection degree, induced from lines over {1, s}
std::vector<MonomialYDModule> reflection_objects(const CategoryPtr& cat) {
  Induction I(cat, Subgroup(cat->group(), {0, 3}));
  std::vector<MonomialYDModule> out;
  for (const auto& V : simple_lines(I.source()))
    if (V.degree(0) == 1) out.push_back(I.induce(V));
  return out;
}

}  // namespace

TEST(LocalModules, FreeModuleLocality) {
  auto cat = dihedral(1, 0);
  Subgroup Z3(cat->group(), {0, 1, 2});
  auto A = build_AH(cat, Z3);
  // rotations act trivially on G/Z3, so free modules on rotation degrees are local
  Induction I(cat, Z3);
  for (const auto& V : simple_lines(I.source())) {
    auto F = free_module(I.induce(V), A);
    EXPECT_TRUE(check_module(F).ok());
    EXPECT_TRUE(is_local(F));
  }
  auto refl = reflection_objects(cat);
  ASSERT_FALSE(refl.empty());
  for (const auto& X : refl) {
    auto F = free_module(X, A);
    EXPECT_TRUE(check_module(F).ok());
    EXPECT_FALSE(is_local(F));
  }
}

TEST(LocalModules, ExtractRejectsNonLocal) {
  auto cat = dihedral(1, 3);
  Subgroup Z3(cat->group(), {0, 1, 2});
  Induction I(cat, Z3);
  auto A = build_AH(cat, Z3);
  auto refl = reflection_objects(cat);
  ASSERT_FALSE(refl.empty());
  auto F = free_module(refl.front(), A);
  ASSERT_FALSE(is_local(F));
  EXPECT_THROW(decompose_and_extract(I, F), std::invalid_argument);
}

TEST(LocalModules, RoundTrip) {
  std::mt19937_64 rng(77);
  for (int m : {1, 2}) {
    for (int p : {0, 2 * m + 1, 4 * m + 1}) {
      auto cat = dihedral(m, p);
      for (auto& H : enumerate_subgroups(cat->group())) {
        Induction I(cat, H);
        for (int t = 0; t < 2; ++t) {
          auto V = random_module(I.source(), rng, 2);
          auto L = induced_module(I, V);
          auto ex = decompose_and_extract(I, L);
          EXPECT_TRUE(structurally_isomorphic(ex.V, V).has_value()) << m << "," << p << " |H|=" << H.order();
          auto back = induced_module(I, ex.V);
          EXPECT_TRUE(structurally_isomorphic(back.obj, L.obj).has_value());
        }
      }
    }
  }
}

TEST(LocalModules, RelativeTensor) {
  std::mt19937_64 rng(19);
  for (int p : {0, 3, 5}) {
    auto cat = dihedral(1, p);
    for (auto& H : enumerate_subgroups(cat->group())) {
      Induction I(cat, H);
      auto U = random_module(I.source(), rng, 2), V = random_module(I.source(), rng, 2);
      auto r = check_relative_tensor(I, U, V);
      EXPECT_TRUE(r.ok()) << ::testing::PrintToString(r.failures);
      EXPECT_GT(r.checked, 0u);
    }
  }
}

TEST(LocalModules, FpdimExamples) {
  auto r = fpdim_report(6, 6, 3);
  EXPECT_EQ(r.fpdim_center, R(36));
  EXPECT_EQ(r.fpdim_rep_loc, R(4));
  EXPECT_TRUE(r.rep_matches);
  EXPECT_TRUE(r.rep_loc_matches);
  EXPECT_TRUE(r.consistent);

  auto same = fpdim_report(10, 5, 5);
  EXPECT_EQ(same.fpdim_rep_loc, R(1));
  EXPECT_TRUE(same.consistent);

  auto full = fpdim_report(6, 6, 1);
  EXPECT_EQ(full.fpdim_rep_loc, R(36));
  EXPECT_EQ(full.dim_A, R(1));
  EXPECT_TRUE(full.consistent);

  auto wrong = fpdim_report(6, 6, 3, 4);
  EXPECT_FALSE(wrong.consistent);
}

TEST(LocalModules, FpdimForBuiltAlgebras) {
  auto cat = dihedral(1, 3);
  const auto& G = cat->group();
  for (auto& H : enumerate_subgroups(G)) {
    auto catH = restrict_category(cat, H);
    for (auto& N : normal_subgroups(catH->group())) {
      auto sol = solve_pairs(*catH, N.elements(), default_pair_modulus(*catH, static_cast<std::size_t>(N.order())));
      if (!sol) continue;
      auto x = dedupe_iso(*sol, catH->group(), N.elements()).representatives.front();
      auto A = build_A(cat, H, x);
      auto r = fpdim_report(G->order(), H.order(), N.order(), static_cast<std::int64_t>(A.dim()));
      EXPECT_TRUE(r.consistent && r.rep_matches && r.rep_loc_matches);
      EXPECT_TRUE(check_A_local_over_A1(cat, H, x, A).ok()) << "|H|=" << H.order() << " |N|=" << N.order();
    }
  }
}
