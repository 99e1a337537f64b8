#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dwcat/affine.hpp"
#include "dwcat/group.hpp"
#include "dwcat/phase.hpp"

namespace dwcat {

// Function G^n -> Q/Z, dense, first argument most significant.
class Cochain {
 public:
  Cochain(GroupPtr G, int arity);

  const GroupPtr& group() const { return G_; }
  int arity() const { return arity_; }
  std::size_t size() const { return values_.size(); }

  std::size_t index(const int* args) const;
  Phase at(const int* args) const { return values_[index(args)]; }
  void set(const int* args, Phase v) { values_[index(args)] = v; }
  Phase operator()(int a) const { return values_[static_cast<std::size_t>(a)]; }
  Phase operator()(int a, int b) const { return values_[static_cast<std::size_t>(a * n_ + b)]; }
  Phase operator()(int a, int b, int c) const { return values_[static_cast<std::size_t>((a * n_ + b) * n_ + c)]; }
  Phase& value(std::size_t i) { return values_[i]; }
  Phase value(std::size_t i) const { return values_[i]; }
  const std::vector<Phase>& values() const { return values_; }

  bool is_normalized() const;
  bool is_zero() const;
  std::int64_t lcm_denominator() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  bool operator==(const Cochain& o) const { return G_ == o.G_ && arity_ == o.arity_ && values_ == o.values_; }

 private:
  GroupPtr G_;
  int arity_;
  int n_;
  std::vector<Phase> values_;
};

Cochain bar_differential(const Cochain& f);

// first tuple (g0..g_n) where d f is nonzero, if any
std::optional<std::vector<int>> cocycle_violation(const Cochain& f);
bool is_cocycle(const Cochain& f);

Cochain dihedral_omega_p(const GroupPtr& D, int m, int p);
Cochain dihedral_omega_p(int m, int p);

// restriction to the subgroup, indexed by local subgroup indices
Cochain restrict(const Cochain& f, const Subgroup& H);
Cochain adjust_by_coboundary(const Cochain& omega, const Cochain& mu);

// Matrix of d on normalized n-cochains: variables are normalized n-tuples,
// rows are normalized (n+1)-tuples.
SparseSystem normalized_differential(const GroupPtr& G, int n);
std::size_t normalized_index(const GroupPtr& G, const int* args, int n);
Cochain cochain_from_normalized(const GroupPtr& G, int n, const std::vector<std::int64_t>& exps, std::int64_t M);

struct CohomologyGroup {
  std::vector<std::int64_t> invariant_factors;
  std::uint64_t order() const;
};

// The M-torsion of H^n(G, Q/Z) = H^{n+1}(G, Z), i.e. the classes represented
// by mu_M-valued normalized cocycles.
CohomologyGroup cohomology_group(const GroupPtr& G, int n, std::int64_t M);

// Generators of the normalized n-cocycles with values in mu_M.
std::vector<Cochain> cocycle_generators(const GroupPtr& G, int n, std::int64_t M);

// (epsilon, kappa) in the truncated total complex for N normal in H. N is a
// subgroup of H (H itself given by its own table).
struct TotalCochain2 {
  GroupPtr H;
  std::vector<int> N;  // elements of N as H indices, sorted, identity first
  std::vector<Phase> eps;    // |H| x |N|, eps[h * |N| + j] = epsilon_h(N[j])
  std::vector<Phase> kappa;  // |N| x |N|

  TotalCochain2(GroupPtr H, std::vector<int> N);
  std::size_t nsize() const { return N.size(); }
  Phase epsilon(int h, std::size_t j) const { return eps[static_cast<std::size_t>(h) * N.size() + j]; }
  Phase k(std::size_t i, std::size_t j) const { return kappa[i * N.size() + j]; }
  bool is_normalized() const;
  TotalCochain2 operator-(const TotalCochain2& o) const;
  TotalCochain2 operator+(const TotalCochain2& o) const;
};

struct TotalD2 {
  std::vector<Phase> tau_part;    // |H| x |H| x |N|
  std::vector<Phase> gamma_part;  // |H| x |N| x |N|
  std::vector<Phase> omega_part;  // |N|^3
  bool is_zero() const;
};

TotalD2 total_d2(const TotalCochain2& x);
TotalCochain2 total_d1(const GroupPtr& H, const std::vector<int>& N, const std::vector<Phase>& sigma);

// sigma with sigma(1) = 0 and d_Tot^1 sigma = x, searched among
// mu_{M|N|}-valued functions; absent if none exists.
std::optional<std::vector<Phase>> h2tot_trivial_witness(const TotalCochain2& x, std::int64_t M);

}  // namespace dwcat
