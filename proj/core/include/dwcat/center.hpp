#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dwcat/cohomology.hpp"

namespace dwcat {

// tau(h,k)(d) and gamma(h)(d,f) derived from a normalized 3-cocycle.
class TauGamma {
 public:
  explicit TauGamma(const Cochain& omega);

  Phase tau(int h, int k, int d) const { return tau_[idx(h, k, d)]; }
  Phase gamma(int h, int d, int f) const { return gamma_[idx(h, d, f)]; }
  void set_tau(int h, int k, int d, Phase v) { tau_[idx(h, k, d)] = v; }
  void set_gamma(int h, int d, int f, Phase v) { gamma_[idx(h, d, f)] = v; }

 private:
  std::size_t idx(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)) * n_ + static_cast<std::size_t>(c);
  }
  std::size_t n_;
  std::vector<Phase> tau_, gamma_;
};

// Z(Vect_G^omega) as a computational context: group, cocycle, derived tables.
class Category {
 public:
  // validates that omega is a normalized 3-cocycle
  Category(GroupPtr G, Cochain omega);
  // no validation; tables may be deliberately inconsistent (mutation tests)
  Category(GroupPtr G, Cochain omega, TauGamma tg);

  const GroupPtr& group() const { return G_; }
  const FiniteGroup& G() const { return *G_; }
  const Cochain& omega() const { return omega_; }
  const TauGamma& tg() const { return tg_; }
  Phase w(int a, int b, int c) const { return omega_(a, b, c); }
  Phase tau(int h, int k, int d) const { return tg_.tau(h, k, d); }
  Phase gamma(int h, int d, int f) const { return tg_.gamma(h, d, f); }

 private:
  GroupPtr G_;
  Cochain omega_;
  TauGamma tg_;
};

using CategoryPtr = std::shared_ptr<const Category>;

CategoryPtr make_category(GroupPtr G, Cochain omega);
// the category over H with the restricted cocycle, H indexed locally
CategoryPtr restrict_category(const CategoryPtr& cat, const Subgroup& H);

struct IdentityResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::vector<int>> examples;  // first few violating tuples
  bool ok() const { return violations == 0; }
};

// Six identities among omega, tau and gamma, each swept over all tuples.
std::vector<IdentityResult> verify_cocycle_identities(const Category& cat, std::size_t max_examples = 8);

}  // namespace dwcat
