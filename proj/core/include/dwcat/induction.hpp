#pragma once

#include <random>
#include <string>
#include <vector>

#include "dwcat/algebra.hpp"

namespace dwcat {

// The functor I: Z(Vect_H^omega) -> Z(Vect_G^omega), V |-> kG (x)_{kH} V, on monomial
// objects. The basis of I(V) is g_i (x) v_b for coset representatives g_i, index i * dim V + b.
class Induction {
 public:
  Induction(CategoryPtr ambient, Subgroup H);

  const CategoryPtr& ambient() const { return cat_; }
  const CategoryPtr& source() const { return catH_; }
  const Subgroup& subgroup() const { return H_; }
  std::size_t index() const { return H_.coset_reps().size(); }

  // global degree of a source basis vector
  int global_degree(const MonomialYDModule& V, std::size_t b) const { return H_.global(V.degree(b)); }

  // g (x) v_b for arbitrary g in G written on the basis: (coefficient phase, basis index of I(V))
  std::pair<Phase, std::size_t> normal_form(const MonomialYDModule& V, int g, std::size_t b) const;

  MonomialYDModule induce(const MonomialYDModule& V) const;
  // I(f) for f: V -> W
  LinearMap induce_map(const LinearMap& f) const;
  // I(V) (x) I(W) -> I(V (x) W)
  LinearMap lax_mu(const MonomialYDModule& V, const MonomialYDModule& W) const;
  // I(V (x) W) -> I(V) (x) I(W)
  LinearMap oplax_nu(const MonomialYDModule& V, const MonomialYDModule& W) const;
  // 1 -> I(1) and I(1) -> 1
  LinearMap lax_unit() const;
  LinearMap oplax_counit() const;

  CenterAlgebra induce_algebra(const CenterAlgebra& B) const;

 private:
  CategoryPtr cat_;
  Subgroup H_;
  CategoryPtr catH_;
};

struct FrobeniusMonoidalReport {
  bool separable = true;     // mu nu = id
  bool mu_morphism = true, nu_morphism = true;
  bool lax_associative = true, lax_unital = true;
  bool oplax_coassociative = true, oplax_counital = true;
  bool frobmon1 = true, frobmon2 = true;
  bool braided_lax = true, braided_oplax = true;
  bool ribbon = true;  // I(theta_V) = theta_{I(V)}
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

FrobeniusMonoidalReport verify_frobenius_monoidal(const Induction& I, const MonomialYDModule& V,
                                                  const MonomialYDModule& W, const MonomialYDModule& U);

// Random monomial module over cat: a few summands, each induced from a projective
// character line on the centralizer of a random element, in a random phase gauge.
MonomialYDModule random_module(const CategoryPtr& cat, std::mt19937_64& rng, int max_summands = 3);

}  // namespace dwcat
