#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "dwcat/classification.hpp"

using namespace dwcat;

namespace {

CategoryPtr dihedral(int m, int p) { return make_category(make_dihedral_odd(m), dihedral_omega_p(m, p)); }
CategoryPtr untwisted(const GroupPtr& G) { return make_category(G, Cochain(G, 3)); }

using Key = std::vector<std::int64_t>;

// numerators of (kappa, epsilon) over the common denominator M, identity rows dropped
Key key_of(const TotalCochain2& x, std::int64_t M) {
  Key k;
  for (const auto& v : x.kappa) k.push_back(v.at_modulus(M));
  for (const auto& v : x.eps) k.push_back(v.at_modulus(M));
  return k;
}

// every normalized mu_M-valued (kappa, epsilon) passing the four conditions
std::vector<TotalCochain2> brute_pairs(const Category& catH, const std::vector<int>& N, std::int64_t M) {
  const std::size_t k = N.size(), nh = static_cast<std::size_t>(catH.G().order());
  PairLayout L{k, nh};
  std::vector<std::int64_t> v(L.num_vars(), 0);
  std::vector<TotalCochain2> out;
  while (true) {
    TotalCochain2 x(catH.group(), N);
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t j = 1; j < k; ++j) x.kappa[i * k + j] = Phase(v[L.kappa_var(i, j)], M);
    for (std::size_t h = 1; h < nh; ++h)
      for (std::size_t j = 1; j < k; ++j) x.eps[h * k + j] = Phase(v[L.eps_var(h, j)], M);
    if (cocycle_data_violations(catH, x).empty()) out.push_back(x);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == M) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

// orbits of the solution set under x -> x + d1(sigma), sigma ranging over mu_K on N
std::size_t brute_orbits(const std::vector<TotalCochain2>& sols, const GroupPtr& H, const std::vector<int>& N,
                         std::int64_t M, std::int64_t K) {
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < sols.size(); ++i) index[key_of(sols[i], M)] = i;
  std::vector<std::size_t> parent(sols.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const std::size_t k = N.size();
  std::vector<std::int64_t> s(k, 0);
  while (true) {
    std::vector<Phase> sigma(k);
    for (std::size_t j = 1; j < k; ++j) sigma[j] = Phase(s[j], K);
    TotalCochain2 d = total_d1(H, N, sigma);
    bool integral = true;
    for (const auto& p : d.kappa) integral = integral && (M % p.den() == 0);
    for (const auto& p : d.eps) integral = integral && (M % p.den() == 0);
    if (integral)
      for (std::size_t i = 0; i < sols.size(); ++i) {
        auto it = index.find(key_of(sols[i] + d, M));
        if (it != index.end()) parent[find(i)] = find(it->second);
      }
    std::size_t j = 1;
    while (j < k && ++s[j] == K) s[j++] = 0;
    if (j >= k) break;
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < sols.size(); ++i) roots.insert(find(i));
  return roots.size();
}

// gauge maps e_n -> exp(2 pi i phi(n)) e'_n with phi in mu_K, checked on the built algebras
bool brute_gauge_iso(const CenterAlgebra& A, const CenterAlgebra& B, std::int64_t K) {
  const std::size_t k = A.dim();
  std::vector<std::int64_t> s(k, 0);
  while (true) {
    LinearMap f(k, k);
    for (std::size_t j = 0; j < k; ++j) f.add(j, j, Phase(s[j], K));
    if (f * A.mult == B.mult * tensor(f, f) && f * A.unit == B.unit && is_morphism(f, A.obj, B.obj)) return true;
    std::size_t j = 1;
    while (j < k && ++s[j] == K) s[j++] = 0;
    if (j >= k) return false;
  }
}

std::size_t total_classes(const ClassificationReport& r) {
  std::size_t c = 0;
  for (const auto& p : r.pairs) c += p.classes;
  return c;
}

}  // namespace

TEST(Classification, LayoutOrder) {
  PairLayout L{3, 6};
  EXPECT_EQ(L.num_vars(), 4u + 10u);
  EXPECT_EQ(L.kappa_var(1, 1), 0u);
  EXPECT_EQ(L.kappa_var(2, 1), 2u);
  EXPECT_EQ(L.eps_var(1, 1), 4u);
  EXPECT_EQ(L.eps_var(5, 2), 13u);
}

TEST(Classification, SolvePairsExamples) {
  auto cat = dihedral(1, 1);
  Subgroup Z3(cat->group(), {0, 1, 2});
  auto catZ3 = restrict_category(cat, Z3);
  EXPECT_FALSE(solve_pairs(*catZ3, {0, 1, 2}, 9).has_value());
  EXPECT_FALSE(solve_pairs(*catZ3, {0, 1, 2}, 27).has_value());
  auto trivialN = solve_pairs(*catZ3, {0}, 9);
  ASSERT_TRUE(trivialN);
  EXPECT_EQ(trivialN->cardinality(), 1u);

  auto cat0 = dihedral(1, 0);
  auto c0 = restrict_category(cat0, Subgroup(cat0->group(), {0, 1, 2}));
  auto sol = solve_pairs(*c0, {0, 1, 2}, 9);
  ASSERT_TRUE(sol);
  sol->for_each([&](const std::vector<std::int64_t>& e) {
    EXPECT_TRUE(cocycle_data_violations(*c0, cochain_from_exponents(c0->group(), {0, 1, 2}, e, 9)).empty());
  });
}

TEST(Classification, SolverMatchesBruteForce) {
  struct Case {
    CategoryPtr cat;
    std::vector<int> N;
    std::int64_t M;
  };
  auto z3 = untwisted(make_cyclic(3));
  auto z2 = untwisted(make_cyclic(2));
  auto z4 = untwisted(make_cyclic(4));
  auto z6 = untwisted(make_cyclic(6));
  auto d3 = dihedral(1, 3);
  std::vector<Case> cases{{z3, {0, 1, 2}, 3}, {z2, {0, 1}, 4}, {z4, {0, 2}, 4}, {z4, {0, 2}, 8},
                          {z6, {0, 3}, 4}, {d3, {0}, 6}};
  for (const auto& c : cases) {
    auto want = brute_pairs(*c.cat, c.N, c.M);
    auto got = solve_pairs(*c.cat, c.N, c.M);
    ASSERT_EQ(got.has_value(), !want.empty());
    if (!got) continue;
    std::set<Key> a, b;
    for (const auto& x : want) a.insert(key_of(x, c.M));
    got->for_each([&](const std::vector<std::int64_t>& e) {
      b.insert(key_of(cochain_from_exponents(c.cat->group(), c.N, e, c.M), c.M));
    });
    EXPECT_EQ(a, b) << "|H|=" << c.cat->G().order() << " |N|=" << c.N.size() << " M=" << c.M;
    EXPECT_EQ(got->cardinality(), want.size());
  }
}

TEST(Classification, DedupeMatchesOrbitCount) {
  struct Case {
    CategoryPtr cat;
    std::vector<int> N;
    std::int64_t M;
  };
  auto z2 = untwisted(make_cyclic(2));
  auto z3 = untwisted(make_cyclic(3));
  auto z4 = untwisted(make_cyclic(4));
  auto z6 = untwisted(make_cyclic(6));
  std::vector<Case> cases{{z3, {0, 1, 2}, 3}, {z2, {0, 1}, 4}, {z4, {0, 2}, 8}, {z6, {0, 3}, 4}};
  for (const auto& c : cases) {
    auto sol = solve_pairs(*c.cat, c.N, c.M);
    ASSERT_TRUE(sol);
    auto dd = dedupe_iso(*sol, c.cat->group(), c.N);
    auto all = brute_pairs(*c.cat, c.N, c.M);
    std::size_t orbits = brute_orbits(all, c.cat->group(), c.N, c.M, c.M * static_cast<std::int64_t>(c.N.size()));
    EXPECT_EQ(dd.representatives.size(), orbits) << "|H|=" << c.cat->G().order() << " |N|=" << c.N.size();
    EXPECT_EQ(dd.solutions, Count(all.size()));
    for (std::size_t i = 0; i < dd.representatives.size(); ++i)
      for (std::size_t j = i + 1; j < dd.representatives.size(); ++j)
        EXPECT_FALSE(h2tot_trivial_witness(dd.representatives[i] - dd.representatives[j], c.M).has_value());
  }
}

TEST(Classification, CyclicSquareHasOneClass) {
  // the braided commutativity condition forces epsilon_n(m) = kappa(m,n) - kappa(n,m),
  // so the H^1(Z3, Z3) family collapses to the symmetric class
  auto z3 = untwisted(make_cyclic(3));
  std::vector<int> N{0, 1, 2};
  auto sol = solve_pairs(*z3, N, default_pair_modulus(*z3, 3));
  ASSERT_TRUE(sol);
  auto reps = dedupe_iso(*sol, z3->group(), N).representatives;
  EXPECT_EQ(reps.size(), 1u);
  for (const auto& x : brute_pairs(*z3, N, 3))
    for (std::size_t n = 0; n < 3; ++n)
      for (std::size_t m = 0; m < 3; ++m) EXPECT_EQ(x.epsilon(static_cast<int>(N[n]), m), x.k(m, n) - x.k(n, m));
}

TEST(Classification, GaugeSearchAgreesWithDedupe) {
  auto V4 = untwisted(make_direct_product({make_cyclic(2), make_cyclic(2)}));
  std::vector<int> N{0, 1, 2, 3};
  auto sol = solve_pairs(*V4, N, 4);
  ASSERT_TRUE(sol);
  auto reps = dedupe_iso(*sol, V4->group(), N).representatives;
  ASSERT_EQ(reps.size(), 2u);
  std::vector<CenterAlgebra> B;
  for (const auto& x : reps) B.push_back(build_B(V4, x));
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) EXPECT_EQ(brute_gauge_iso(B[i], B[j], 16), i == j) << i << "," << j;
  // a coboundary shift is found by the search
  TotalCochain2 shifted = reps[1] + total_d1(V4->group(), N, {Phase(), Phase(1, 16), Phase(3, 16), Phase(5, 16)});
  EXPECT_TRUE(brute_gauge_iso(B[1], build_B(V4, shifted), 16));
}

TEST(Classification, DihedralExpectedExamples) {
  auto d3p0 = dihedral_expected(1, 0);
  std::map<std::tuple<bool, int, bool, int>, std::size_t> m;
  for (const auto& f : d3p0) m[{f.H_dihedral, f.x, f.N_dihedral, f.y}] = f.count;
  EXPECT_EQ((m[{false, 3, false, 3}]), 3u);
  EXPECT_EQ((m[{true, 3, false, 3}]), 1u);
  EXPECT_EQ((m[{true, 3, true, 3}]), 1u);
  EXPECT_EQ((m[{false, 1, false, 1}]), 1u);
  EXPECT_EQ(m.size(), 8u);

  for (const auto& f : dihedral_expected(1, 1)) {
    EXPECT_EQ(f.y, 1);
    EXPECT_FALSE(f.N_dihedral && f.x > 1);
  }
  EXPECT_THROW(dihedral_expected(0, 0), std::invalid_argument);
}

TEST(Classification, DihedralShapes) {
  EXPECT_EQ(dihedral_shape(1, {0}), std::make_pair('Z', 1));
  EXPECT_EQ(dihedral_shape(1, {0, 1, 2}), std::make_pair('Z', 3));
  EXPECT_EQ(dihedral_shape(1, {0, 3}), std::make_pair('D', 1));
  EXPECT_EQ(dihedral_shape(1, {0, 1, 2, 3, 4, 5}), std::make_pair('D', 3));
  EXPECT_EQ(prime_factors(36), (std::vector<std::int64_t>{2, 3}));
  EXPECT_TRUE(prime_factors(1).empty());
}

TEST(Classification, ClassifyD3Untwisted) {
  auto cat = dihedral(1, 0);
  ClassifyOptions opt;
  opt.expect_dihedral = std::make_pair(1, 0);
  auto rep = classify(cat, opt);
  EXPECT_TRUE(rep.failures.empty());
  EXPECT_EQ(rep.entries.size(), total_classes(rep));
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.verified);
    EXPECT_TRUE(e.props.rigid);
    EXPECT_TRUE(e.cross_path);
    EXPECT_TRUE(e.local_over_A1);
    EXPECT_EQ(e.beta_A, static_cast<std::int64_t>(e.N.size()));
    EXPECT_EQ(e.beta_1, 6 / static_cast<std::int64_t>(e.H.size()));
    EXPECT_EQ(e.qdim, e.beta_A * e.beta_1);
  }
  for (const auto& p : rep.pairs) {
    EXPECT_TRUE(p.escalation_stable);
    EXPECT_TRUE(p.distinct);
    EXPECT_TRUE(p.exact_division);
  }
  ASSERT_TRUE(rep.comparison);
  // Z3/Z3 has one class where the closed form lists three
  bool saw = false;
  for (const auto& r : rep.comparison->rows)
    if (r.H_name == "Z3" && r.N_name == "Z3") {
      saw = true;
      EXPECT_EQ(r.expected, 3u);
      EXPECT_EQ(r.actual, 1u);
      EXPECT_FALSE(r.flagged);
    }
  EXPECT_TRUE(saw);
  EXPECT_FALSE(rep.comparison->cyclic_match);
}

TEST(Classification, ClassifyD3Twisted) {
  auto cat = dihedral(1, 2);
  ClassifyOptions opt;
  opt.expect_dihedral = std::make_pair(1, 2);
  auto rep = classify(cat, opt);
  ASSERT_TRUE(rep.comparison);
  EXPECT_TRUE(rep.comparison->unflagged_ok);
  EXPECT_TRUE(rep.comparison->cyclic_match);
  for (const auto& e : rep.entries) EXPECT_TRUE(e.props.rigid);
}

TEST(Classification, DeterministicAcrossJobs) {
  auto cat = dihedral(1, 3);
  ClassifyOptions a, b;
  a.jobs = 1;
  b.jobs = 4;
  auto ra = classify(cat, a), rb = classify(cat, b);
  ASSERT_EQ(ra.entries.size(), rb.entries.size());
  for (std::size_t i = 0; i < ra.entries.size(); ++i) {
    EXPECT_EQ(ra.entries[i].H, rb.entries[i].H);
    EXPECT_EQ(ra.entries[i].N, rb.entries[i].N);
    EXPECT_EQ(ra.entries[i].data.kappa, rb.entries[i].data.kappa);
    EXPECT_EQ(ra.entries[i].data.eps, rb.entries[i].data.eps);
  }
}

TEST(Classification, CharacteristicFilter) {
  auto cat = dihedral(1, 0);
  ClassifyOptions opt;
  opt.verify = false;
  opt.char_p = 3;
  auto rep = classify(cat, opt);
  ASSERT_FALSE(rep.entries.empty());
  for (const auto& e : rep.entries) EXPECT_NE(e.qdim % 3, 0);
  opt.char_p.reset();
  auto all = classify(cat, opt);
  EXPECT_LT(rep.entries.size(), all.entries.size());
}

TEST(Classification, ConjugationAnnotation) {
  auto cat = dihedral(1, 0);
  ClassifyOptions opt;
  opt.verify = false;
  opt.conjugation_dedup = true;
  auto rep = classify(cat, opt);
  std::size_t firsts = 0;
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const auto& e = rep.entries[i];
    if (!e.conjugate_of) {
      ++firsts;
      continue;
    }
    ASSERT_LT(*e.conjugate_of, i);
    EXPECT_EQ(rep.entries[*e.conjugate_of].H.size(), e.H.size());
    EXPECT_EQ(rep.entries[*e.conjugate_of].N.size(), e.N.size());
  }
  EXPECT_EQ(firsts, rep.conjugation_classes);
  EXPECT_LT(rep.conjugation_classes, rep.entries.size());
}

TEST(Classification, ModulusOverride) {
  auto cat = dihedral(1, 0);
  ClassifyOptions a, b;
  a.verify = b.verify = false;
  b.modulus = 72;
  EXPECT_EQ(total_classes(classify(cat, a)), total_classes(classify(cat, b)));
}
