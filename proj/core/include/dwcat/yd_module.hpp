#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwcat/affine.hpp"
#include "dwcat/center.hpp"
#include "dwcat/linear_map.hpp"

namespace dwcat {

struct MonomialAction {
  int target;
  Phase phase;
  bool operator==(const MonomialAction&) const = default;
};

// Object of Z(Vect_G^omega) whose G-action permutes a graded basis up to phases.
class MonomialYDModule {
 public:
  MonomialYDModule() = default;
  MonomialYDModule(CategoryPtr cat, std::vector<int> degree, std::vector<MonomialAction> action,
                   std::vector<std::string> labels = {});

  const CategoryPtr& category() const { return cat_; }
  std::size_t dim() const { return degree_.size(); }
  int degree(std::size_t b) const { return degree_[b]; }
  const std::vector<int>& degrees() const { return degree_; }
  // g . v_b
  const MonomialAction& act(int g, std::size_t b) const {
    return action_[static_cast<std::size_t>(g) * degree_.size() + b];
  }
  const std::vector<MonomialAction>& action_table() const { return action_; }
  const std::string& label(std::size_t b) const { return labels_[b]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool same_tables(const MonomialYDModule& o) const {
    return degree_ == o.degree_ && action_ == o.action_;
  }

 private:
  CategoryPtr cat_;
  std::vector<int> degree_;
  std::vector<MonomialAction> action_;  // index g * dim + b
  std::vector<std::string> labels_;
};

struct YdViolation {
  std::string kind;
  std::vector<int> where;
};

// identity, grading, bijectivity and twisted-associativity checks
std::vector<YdViolation> check_yd(const MonomialYDModule& V, std::size_t max_report = 8);

MonomialYDModule unit_object(const CategoryPtr& cat);
// 1-dimensional module of degree d with action h . v = chi(h) v
MonomialYDModule graded_line(const CategoryPtr& cat, int d, const std::vector<Phase>& chi);
// chi: G -> Q/Z with chi(1) = 0 and chi(h) + chi(k) - chi(hk) = tau(h,k)(d), d central;
// variables are chi(g) for g != 1 as exponents modulo |G| * lcm(tau denominators)
std::optional<AffineSolutionSet> projective_characters(const Category& cat, int d);
std::vector<Phase> character_from_exponents(const Category& cat, const AffineSolutionSet& sol,
                                            const std::vector<std::int64_t>& x);
// all 1-dimensional modules (central degree with a tau(.,.)(d)-projective character)
std::vector<MonomialYDModule> simple_lines(const CategoryPtr& cat);
MonomialYDModule direct_sum(const MonomialYDModule& V, const MonomialYDModule& W);
// same object in the basis e^{2 pi i sigma_b} v_b
MonomialYDModule regauge(const MonomialYDModule& V, const std::vector<Phase>& sigma);

MonomialYDModule tensor(const MonomialYDModule& V, const MonomialYDModule& W);

// maps between objects
LinearMap braiding(const MonomialYDModule& V, const MonomialYDModule& W);          // V(x)W -> W(x)V
LinearMap braiding_inverse(const MonomialYDModule& V, const MonomialYDModule& W);  // W(x)V -> V(x)W
LinearMap ribbon(const MonomialYDModule& V);
// (U(x)V)(x)W -> U(x)(V(x)W) and its inverse; both bases share one index
LinearMap associator(const MonomialYDModule& U, const MonomialYDModule& V, const MonomialYDModule& W);
LinearMap associator_inverse(const MonomialYDModule& U, const MonomialYDModule& V, const MonomialYDModule& W);
// the matrix of g acting on V
LinearMap action_map(const MonomialYDModule& V, int g);

// f: V -> W respects grading and commutes with the action
std::optional<std::string> morphism_defect(const LinearMap& f, const MonomialYDModule& V, const MonomialYDModule& W);
inline bool is_morphism(const LinearMap& f, const MonomialYDModule& V, const MonomialYDModule& W) {
  return !morphism_defect(f, V, W).has_value();
}

struct HexagonReport {
  bool hexagon1 = true, hexagon2 = true;
};
HexagonReport check_hexagons(const MonomialYDModule& X, const MonomialYDModule& Y, const MonomialYDModule& Z);
// theta_{V(x)W} = (theta_V (x) theta_W) c_{W,V} c_{V,W}
bool check_balancing(const MonomialYDModule& V, const MonomialYDModule& W);

// Basis relabeling plus per-basis phase gauge carrying V onto W, if any.
struct StructuralIso {
  std::vector<std::size_t> perm;  // v_b -> w_{perm[b]}
  std::vector<Phase> gauge;       // times exp(2 pi i gauge[b])
};
std::optional<StructuralIso> structurally_isomorphic(const MonomialYDModule& V, const MonomialYDModule& W);

}  // namespace dwcat
