#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwcat/phase.hpp"

namespace dwcat {

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

// Formal Z-linear combination of roots of unity. Terms are kept sorted by
// phase with like phases merged and zero coefficients dropped; this is a
// syntactic normal form only. Equality is decided in Z[zeta_M].
class CycloSum {
 public:
  using Term = std::pair<Phase, std::int64_t>;

  CycloSum() = default;
  explicit CycloSum(std::int64_t n);
  explicit CycloSum(Phase p, std::int64_t coeff = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  CycloSum& operator+=(const CycloSum& o);
  CycloSum& operator-=(const CycloSum& o);
  CycloSum operator+(const CycloSum& o) const;
  CycloSum operator-(const CycloSum& o) const;
  CycloSum operator-() const;
  CycloSum operator*(const CycloSum& o) const;
  CycloSum shifted(Phase p) const;  // multiply by exp(2 pi i p)
  CycloSum scaled(std::int64_t k) const;
  void add_term(Phase p, std::int64_t c);

  // lcm of term denominators (1 for the empty sum)
  std::int64_t conductor() const;

  // Coefficients of the representative of degree < phi(M) modulo Phi_M,
  // where M is a multiple of the conductor.
  std::vector<std::int64_t> reduced(std::int64_t M) const;

  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;
  // the single phase if the sum is syntactically one term with coefficient 1
  std::optional<Phase> as_monomial() const;

  bool operator==(const CycloSum& o) const;
  bool operator!=(const CycloSum& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace dwcat
