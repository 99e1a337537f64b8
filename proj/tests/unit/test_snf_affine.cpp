#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dwcat/affine.hpp"

using namespace dwcat;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  IntMatrix A(r, c);
  std::uniform_int_distribution<int> e(lo, hi);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A(i, j) = e(rng);
  return A;
}

void expect_smith(const IntMatrix& A, const SnfResult& s) {
  ASSERT_EQ(s.U * A * s.V, s.D);
  ASSERT_EQ(std::abs(s.U.determinant()), 1);
  ASSERT_EQ(std::abs(s.V.determinant()), 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) ASSERT_EQ(s.D(i, j), 0);
  auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    ASSERT_GE(d[i], 0);
    if (i + 1 < d.size() && d[i] != 0) ASSERT_EQ(d[i + 1] % d[i], 0);
    if (d[i] == 0 && i + 1 < d.size()) ASSERT_EQ(d[i + 1], 0);
  }
}

// every x in (Z/M)^k with A x = b
std::set<std::vector<std::int64_t>> brute_solutions(const IntMatrix& A, const std::vector<std::int64_t>& b,
                                                    std::int64_t M) {
  std::set<std::vector<std::int64_t>> out;
  const std::size_t k = A.cols();
  std::vector<std::int64_t> x(k, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < A.rows() && ok; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += A(i, j) * x[j];
      ok = mod_norm(acc - b[i], M) == 0;
    }
    if (ok) out.insert(x);
    std::size_t j = 0;
    while (j < k && ++x[j] == M) x[j++] = 0;
    if (j == k) break;
  }
  return out;
}

}  // namespace

TEST(Snf, Examples) {
  IntMatrix A{{2, 0}, {0, 3}};
  auto s = smith_normal_form(A);
  expect_smith(A, s);
  EXPECT_EQ(s.diagonal(), (std::vector<std::int64_t>{1, 6}));

  IntMatrix Z(3, 2);
  auto z = smith_normal_form(Z);
  expect_smith(Z, z);
  EXPECT_EQ(z.diagonal(), (std::vector<std::int64_t>{0, 0}));

  auto I = IntMatrix::identity(4);
  auto si = smith_normal_form(I);
  expect_smith(I, si);
  EXPECT_EQ(si.D, I);
}

TEST(Snf, RandomMatricesProperty) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < 1000; ++t) {
    IntMatrix A = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    auto s = smith_normal_form(A);
    expect_smith(A, s);
  }
}

TEST(Snf, ModularTransformsAreInverse) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::int64_t K = std::uniform_int_distribution<std::int64_t>(2, 36)(rng);
    IntMatrix A = random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5, -20, 20);
    auto s = smith_normal_form_mod(A, K, kTrackRows | kTrackCols | kTrackInverses);
    IntMatrix D = s.P * A * s.Q;
    for (std::size_t i = 0; i < D.rows(); ++i)
      for (std::size_t j = 0; j < D.cols(); ++j) {
        std::int64_t want = i == j ? s.diag[i] % K : 0;
        ASSERT_EQ(mod_norm(D(i, j), K), mod_norm(want, K));
      }
    IntMatrix PP = s.P * s.Pinv, QQ = s.Q * s.Qinv;
    for (std::size_t i = 0; i < PP.rows(); ++i)
      for (std::size_t j = 0; j < PP.cols(); ++j) ASSERT_EQ(mod_norm(PP(i, j), K), i == j ? 1 : 0);
    for (std::size_t i = 0; i < QQ.rows(); ++i)
      for (std::size_t j = 0; j < QQ.cols(); ++j) ASSERT_EQ(mod_norm(QQ(i, j), K), i == j ? 1 : 0);
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) ASSERT_EQ(s.diag[i + 1] % s.diag[i], 0);
  }
}

TEST(Affine, Examples) {
  EXPECT_FALSE(solve_affine_mod(IntMatrix{{2}}, {1}, 4).has_value());

  IntMatrix Z(1, 3);
  auto all = solve_affine_mod(Z, {0}, 5);
  ASSERT_TRUE(all);
  EXPECT_EQ(all->cardinality(), 125u);

  auto xy = solve_affine_mod(IntMatrix{{1, 1}}, {1}, 3);
  ASSERT_TRUE(xy);
  EXPECT_EQ(xy->cardinality(), 3u);
  EXPECT_EQ(brute_solutions(IntMatrix{{1, 1}}, {1}, 3).size(), 3u);
}

TEST(Affine, MatchesBruteForce) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 400; ++t) {
    std::int64_t M = std::uniform_int_distribution<std::int64_t>(2, 6)(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    IntMatrix A = random_matrix(rng, r, k, -4, 4);
    std::vector<std::int64_t> b(r);
    for (auto& v : b) v = std::uniform_int_distribution<std::int64_t>(0, M - 1)(rng);
    auto want = brute_solutions(A, b, M);
    auto got = solve_affine_mod(A, b, M);
    ASSERT_EQ(got.has_value(), !want.empty());
    if (!got) continue;
    std::set<std::vector<std::int64_t>> seen;
    std::size_t visits = 0;
    got->for_each([&](const std::vector<std::int64_t>& x) {
      ++visits;
      std::vector<std::int64_t> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = mod_norm(x[i], M);
      seen.insert(y);
    });
    ASSERT_EQ(visits, seen.size()) << "enumeration repeats a solution";
    ASSERT_EQ(seen, want);
    ASSERT_EQ(got->cardinality(), want.size());
  }
}

TEST(Affine, CoordinatesRecoverGenerators) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::int64_t M = 12;
    IntMatrix A = random_matrix(rng, 2, 4, -3, 3);
    auto sol = solve_affine_mod(A, {0, 0}, M);
    ASSERT_TRUE(sol);
    std::vector<std::int64_t> c(sol->generators().size());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = std::uniform_int_distribution<std::int64_t>(0, sol->orders()[i] - 1)(rng);
    auto x = sol->element(c);
    std::vector<std::int64_t> kern(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) kern[i] = mod_norm(x[i] - sol->particular()[i], M);
    ASSERT_EQ(sol->coordinates(kern), c);
  }
}

TEST(Affine, InvariantFactorChain) {
  EXPECT_EQ(orders_to_invariant_factors({4, 6}), (std::vector<std::int64_t>{2, 12}));
  EXPECT_EQ(orders_to_invariant_factors({1, 3}), (std::vector<std::int64_t>{3}));
}
