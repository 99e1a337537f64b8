#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwcat/yd_module.hpp"

namespace dwcat {

// Algebra and coalgebra structure on an object of Z(Vect_G^omega).
// mult: A(x)A -> A, unit: 1 -> A, comult: A -> A(x)A, counit: A -> 1.
struct CenterAlgebra {
  MonomialYDModule obj;
  LinearMap mult, unit, comult, counit;

  std::size_t dim() const { return obj.dim(); }
  bool has_coalgebra() const { return comult.src_dim() == obj.dim() && counit.src_dim() == obj.dim(); }
};

struct PropertyReport {
  bool module_valid = false;
  bool associative = false, unital = false, commutative = false;
  bool coassociative = false, counital = false, frobenius = false;
  bool morphisms = false;  // m, u, Delta, epsilon commute with the action and grading
  bool special = false, separable = false, etale = false, rigid = false;
  bool twist_trivial = false;
  bool rigid_consistent = false;
  std::size_t connected = 0;  // dim Hom(1, A)
  std::optional<CycloSum> beta_A;
  CycloSum beta_1;
  CycloSum qdim;
  std::vector<std::string> failures;
};

PropertyReport check_algebra(const CenterAlgebra& A);

// individual checks
bool check_associative(const CenterAlgebra& A);
bool check_unital(const CenterAlgebra& A);
bool check_commutative(const CenterAlgebra& A);
bool check_coassociative(const CenterAlgebra& A);
bool check_counital(const CenterAlgebra& A);
bool check_frobenius(const CenterAlgebra& A);
std::size_t check_connected(const CenterAlgebra& A);
// m o Delta as a scalar multiple of the identity, if it is one
std::optional<CycloSum> special_scalar(const CenterAlgebra& A);
CycloSum counit_of_unit(const CenterAlgebra& A);
CycloSum qdim(const CenterAlgebra& A);

// function algebra on the left cosets G/H
CenterAlgebra build_AH(const CategoryPtr& cat, const Subgroup& H);

// Failed condition tags among
//   kappa-trivializes-omega, epsilon-twisted-action, epsilon-kappa-compat, commutativity
// for (kappa, epsilon) over the category of H (x.H must be cat's group).
std::vector<std::string> cocycle_data_violations(const Category& catH, const TotalCochain2& x);

// B(N, kappa, epsilon) in Z(Vect_H^omega); throws std::invalid_argument naming the
// failing condition unless validate is false
CenterAlgebra build_B(const CategoryPtr& catH, const TotalCochain2& x, bool validate = true);
// A(H, N, kappa, epsilon) in Z(Vect_G^omega); x lives on H with local indices
CenterAlgebra build_A(const CategoryPtr& cat, const Subgroup& H, const TotalCochain2& x, bool validate = true);

// first differing structure map, or nullopt when all tables agree
std::optional<std::string> algebra_difference(const CenterAlgebra& A, const CenterAlgebra& B);

}  // namespace dwcat
