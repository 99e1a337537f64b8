#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dwcat {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;  // overflow-checked
  bool operator==(const IntMatrix& o) const = default;
  bool is_zero() const;

  // determinant by fraction-free elimination (square matrices only)
  std::int64_t determinant() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

// U * A * V = D over Z, D diagonal with d_i | d_{i+1} and d_i >= 0.
struct SnfResult {
  IntMatrix U, D, V;
  std::vector<std::int64_t> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& A);

// Smith form over Z/K. The diagonal entries are divisors of K, with K
// standing for zero. Transforms are tracked only when requested.
struct ModSnfResult {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> diag;  // length min(rows, cols)
  IntMatrix P, Pinv, Q, Qinv;      // P * A * Q = D (mod K)
};

enum SnfTrack : unsigned {
  kTrackNone = 0,
  kTrackRows = 1,
  kTrackCols = 2,
  kTrackInverses = 4,
};

ModSnfResult smith_normal_form_mod(IntMatrix A, std::int64_t K, unsigned track = kTrackNone);

std::int64_t mod_norm(std::int64_t a, std::int64_t m);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);
// inverse of a unit a modulo m; throws if gcd(a, m) != 1
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace dwcat
