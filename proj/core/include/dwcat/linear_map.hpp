#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dwcat/cyclo.hpp"

namespace dwcat {

// Sparse matrix with cyclotomic-integer entries, stored by source column.
class LinearMap {
 public:
  using Entry = std::pair<std::size_t, CycloSum>;
  using Column = std::vector<Entry>;  // sorted by target index

  LinearMap() = default;
  LinearMap(std::size_t src, std::size_t tgt) : src_(src), tgt_(tgt), cols_(src) {}

  static LinearMap identity(std::size_t n);
  static LinearMap zero(std::size_t src, std::size_t tgt) { return LinearMap(src, tgt); }

  std::size_t src_dim() const { return src_; }
  std::size_t tgt_dim() const { return tgt_; }
  const Column& column(std::size_t j) const { return cols_[j]; }
  void add(std::size_t src, std::size_t tgt, const CycloSum& c);
  void add(std::size_t src, std::size_t tgt, Phase p) { add(src, tgt, CycloSum(p)); }
  CycloSum coeff(std::size_t src, std::size_t tgt) const;

  LinearMap scaled(const CycloSum& c) const;
  LinearMap operator+(const LinearMap& o) const;

  bool operator==(const LinearMap& o) const;
  bool operator!=(const LinearMap& o) const { return !(*this == o); }
  // first source index where the maps differ, or src_dim()
  std::size_t first_difference(const LinearMap& o) const;

 private:
  std::size_t src_ = 0, tgt_ = 0;
  std::vector<Column> cols_;
};

// g o f
LinearMap compose(const LinearMap& g, const LinearMap& f);
LinearMap operator*(const LinearMap& g, const LinearMap& f);
// f (x) g on tensor-product bases with index i * dim2 + j
LinearMap tensor(const LinearMap& f, const LinearMap& g);

}  // namespace dwcat
