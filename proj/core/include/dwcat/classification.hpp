#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwcat/algebra.hpp"

namespace dwcat {

// Exponent layout of the unknowns over N normal in H (N as local indices of H):
// kappa(N[i], N[j]) for i, j >= 1, then epsilon(h, N[j]) for h >= 1, j >= 1.
struct PairLayout {
  std::size_t k = 0;   // |N|
  std::size_t nh = 0;  // |H|
  std::size_t num_vars() const { return (k - 1) * (k - 1) + (nh - 1) * (k - 1); }
  std::size_t kappa_var(std::size_t i, std::size_t j) const { return (i - 1) * (k - 1) + (j - 1); }
  std::size_t eps_var(std::size_t h, std::size_t j) const { return (k - 1) * (k - 1) + (h - 1) * (k - 1) + (j - 1); }
};

// default modulus |H| * |N| * lcm(denominators of omega|_H)
std::int64_t default_pair_modulus(const Category& catH, std::size_t nsize);

// All mu_M-valued normalized (kappa, epsilon) satisfying the four conditions, as
// exponents mod M. Absent when there is none.
std::optional<AffineSolutionSet> solve_pairs(const Category& catH, const std::vector<int>& N, std::int64_t M);
TotalCochain2 cochain_from_exponents(const GroupPtr& H, const std::vector<int>& N, const std::vector<std::int64_t>& x,
                                     std::int64_t M);

using Count = boost::multiprecision::cpp_int;

struct DedupResult {
  std::vector<TotalCochain2> representatives;
  Count solutions = 0;  // |solution set|
  Count image = 0;      // |coboundary image|
  bool exact_division = false;  // solutions = representatives * image
};
// representatives of the solution set modulo coboundaries d_Tot^1 sigma
DedupResult dedupe_iso(const AffineSolutionSet& sol, const GroupPtr& H, const std::vector<int>& N);

struct ClassifyOptions {
  std::optional<std::int64_t> modulus;  // override of the per-pair default
  int jobs = 1;
  bool verify = true;      // build each representative and run every checker
  bool escalate = true;    // recount at M * |H|
  bool distinct = true;    // pairwise non-isomorphism of representatives
  bool conjugation_dedup = false;
  std::optional<std::int64_t> char_p;
  std::optional<std::pair<int, int>> expect_dihedral;  // (m, p)
};

struct ClassificationEntry {
  std::vector<int> H, N;  // elements of G
  TotalCochain2 data;     // kappa, epsilon on H with local indices
  std::int64_t qdim = 0, beta_A = 0, beta_1 = 0;
  std::vector<std::int64_t> qdim_primes;
  bool verified = false;
  PropertyReport props;
  bool cross_path = false;    // induce_algebra(build_B) = build_A
  bool local_over_A1 = false;
  std::optional<std::size_t> conjugate_of;  // index of the first entry of a G-conjugate (H, N) pair
};

struct PairSummary {
  std::vector<int> H, N;
  std::string H_name, N_name;
  std::int64_t modulus = 0;
  bool solvable = false;
  std::size_t classes = 0;
  Count solutions = 0, image = 0;
  bool exact_division = true;
  std::optional<std::size_t> escalated_classes;
  bool escalation_stable = true;
  bool distinct = true;
  std::size_t first_entry = 0;  // index into entries
  std::size_t emitted = 0;      // entries kept after the characteristic filter
};

struct ExpectedRow {
  std::vector<int> H, N;
  std::string H_name, N_name;
  std::size_t expected = 0, actual = 0;
  bool match = false;
  bool flagged = false;  // H = N dihedral case, reported as a discrepancy
  std::string note;
};

struct ExpectedComparison {
  int m = 0, p = 0;
  std::vector<ExpectedRow> rows;
  bool cyclic_match = true;   // every N cyclic row matches
  bool unflagged_ok = true;   // every non-matching row is flagged
};

struct ClassificationReport {
  std::optional<std::int64_t> modulus_override;
  std::vector<PairSummary> pairs;
  std::vector<ClassificationEntry> entries;
  std::optional<ExpectedComparison> comparison;
  std::size_t conjugation_classes = 0;  // filled when conjugation_dedup is on
  std::vector<std::string> failures;  // internal-consistency problems
};

ClassificationReport classify(const CategoryPtr& cat, const ClassifyOptions& opt = {});

// Closed-form dihedral family for D_{2m+1} with omega_p.
struct DihedralFamily {
  bool H_dihedral = false;
  int x = 0;  // H = D_x or Z_x
  bool N_dihedral = false;
  int y = 0;  // N = Z_y, or D_x when N_dihedral
  std::size_t count = 0;
};
std::vector<DihedralFamily> dihedral_expected(int m, int p);

// Shape of a subgroup of D_{2m+1}: ("Z", order) for rotations, ("D", order / 2) otherwise
std::pair<char, int> dihedral_shape(int m, const std::vector<int>& elements);

std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace dwcat
