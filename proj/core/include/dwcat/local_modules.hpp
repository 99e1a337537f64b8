#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dwcat/induction.hpp"

namespace dwcat {

// Right module (M, rho: M (x) A -> M) over a CenterAlgebra.
struct AlgebraModule {
  MonomialYDModule obj;
  CenterAlgebra alg;
  LinearMap rho;
};

struct ModuleReport {
  bool associative = false, unital = false, morphism = false;
  bool ok() const { return associative && unital && morphism; }
};

// rho (rho (x) id) = rho (id (x) m) alpha and rho (id (x) u) = id
ModuleReport check_module(const AlgebraModule& M);
// rho = rho c_{A,M} c_{M,A}
bool is_local(const AlgebraModule& M);

// X (x) A with rho = (id (x) m) alpha
AlgebraModule free_module(const MonomialYDModule& X, const CenterAlgebra& A);
// I(V) over A_H = I(1) with rho = mu_{V,1}
AlgebraModule induced_module(const Induction& I, const MonomialYDModule& V);

struct Extraction {
  std::vector<std::vector<std::size_t>> components;  // basis indices of L^i, one list per coset
  MonomialYDModule V;                                 // L^1 with the restricted action, over the subgroup
};

// Splits L over A_H along the idempotents of A_H and returns L^1 as a module over
// H. Throws std::invalid_argument if L is not local, or if the decomposition is not
// compatible with the coset structure.
Extraction decompose_and_extract(const Induction& I, const AlgebraModule& L);

// Checks the relative tensor product description I(U) (x)_{A_H} I(V) ~ I(U (x) V):
// nu-bar Lambda-bar = id and Lambda-bar nu-bar = id, with Lambda evaluated from its
// closed-form normalization on every (g, l) with gH = lH. Returns the number of
// checked pairs, or an error message.
struct RelativeTensorReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
RelativeTensorReport check_relative_tensor(const Induction& I, const MonomialYDModule& U, const MonomialYDModule& V);

struct FpdimReport {
  boost::rational<std::int64_t> fpdim_center;   // |G|^2
  boost::rational<std::int64_t> fpdim_rep;      // FPdim(Rep A)
  boost::rational<std::int64_t> fpdim_rep_loc;  // FPdim(Rep^loc A)
  boost::rational<std::int64_t> dim_A;          // dim_k A
  bool rep_matches = false;      // FPdim(Rep) = |G||H|/|N|
  bool rep_loc_matches = false;  // FPdim(Rep^loc) = |H|^2/|N|^2
  bool consistent = false;       // FPdim(Rep^loc) = |G|^2 / (dim_k A)^2
};
// dim_A defaults to |G||N|/|H|; pass the dimension of a built algebra to check it instead
FpdimReport fpdim_report(std::int64_t G, std::int64_t H, std::int64_t N, std::optional<std::int64_t> dim_A = {});

struct ALocalReport {
  bool subalgebra = false;  // a_{g_i,1} span a copy of A_H
  bool module = false;      // A is a right A_H-module through that copy
  bool local = false;
  bool b_subalgebra = false;  // a_{1,n} reproduce B(N, kappa, epsilon)
  bool ok() const { return subalgebra && module && local && b_subalgebra; }
};
ALocalReport check_A_local_over_A1(const CategoryPtr& cat, const Subgroup& H, const TotalCochain2& x,
                                   const CenterAlgebra& A);

}  // namespace dwcat
