#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dwcat/snf.hpp"

namespace dwcat {

// Linear system over Z with sparse rows; entries are reduced modulo the
// working modulus only when it is solved.
class SparseSystem {
 public:
  using Row = std::vector<std::pair<std::size_t, std::int64_t>>;

  explicit SparseSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows_.size(); }
  void add_row(Row coeffs, std::int64_t rhs = 0);
  const Row& row(std::size_t i) const { return rows_[i]; }
  std::int64_t rhs(std::size_t i) const { return rhs_[i]; }

  static SparseSystem from_dense(const IntMatrix& A, const std::vector<std::int64_t>& b);

 private:
  std::size_t num_vars_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> rhs_;
};

// { x : A x = b (mod M) } = particular + <generators>, with the kernel the
// internal direct sum of the cyclic groups generated by each generator.
class AffineSolutionSet {
 public:
  std::int64_t modulus() const { return modulus_; }
  std::size_t num_vars() const { return particular_.size(); }
  const std::vector<std::int64_t>& particular() const { return particular_; }
  const std::vector<std::vector<std::int64_t>>& generators() const { return generators_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }

  // invariant factors d_1 | d_2 | ... of the kernel (units dropped)
  std::vector<std::int64_t> invariant_factors() const;
  // number of solutions, absent on overflow
  std::optional<std::uint64_t> cardinality() const;

  std::vector<std::int64_t> element(const std::vector<std::int64_t>& coeffs) const;
  // coefficients (reduced modulo orders) of a kernel element
  std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& kernel_vec) const;
  // visits every solution exactly once in mixed-radix order
  void for_each(const std::function<void(const std::vector<std::int64_t>&)>& fn) const;

 private:
  friend std::optional<AffineSolutionSet> solve_affine_mod(const SparseSystem&, std::int64_t);

  std::int64_t modulus_ = 0;
  std::vector<std::int64_t> particular_;
  std::vector<std::vector<std::int64_t>> generators_;
  std::vector<std::int64_t> orders_;

  // coordinate recovery: generators come either from the Smith block
  // (y = Qinv * x restricted to block columns) or from untouched columns
  std::vector<std::size_t> block_cols_;
  IntMatrix block_qinv_;
  struct GenSource {
    bool from_block;
    std::size_t index;  // y index or variable index
    std::int64_t step;  // y_i = step * coefficient
  };
  std::vector<GenSource> sources_;
};

std::optional<AffineSolutionSet> solve_affine_mod(const SparseSystem& sys, std::int64_t M);
std::optional<AffineSolutionSet> solve_affine_mod(const IntMatrix& A, const std::vector<std::int64_t>& b,
                                                  std::int64_t M);

// Smith diagonal of the system matrix over Z/K (K standing for zero), length
// min(rows, vars). Right-hand sides are ignored.
std::vector<std::int64_t> invariant_factors_mod(const SparseSystem& sys, std::int64_t K);

// Turn a list of cyclic orders into the invariant factor chain.
std::vector<std::int64_t> orders_to_invariant_factors(const std::vector<std::int64_t>& orders);

}  // namespace dwcat
