#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dwcat {

// Group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int element_order(int a) const;
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<int>> table() const;
  bool same_table(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }
  bool is_abelian() const;
  std::vector<int> center() const;

 private:
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// pointer identity or identical multiplication tables
inline bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && a->same_table(*b)); }

GroupPtr make_cyclic(int n);

// D_{2m+1}; element index = g0*(2m+1) + (g1 mod 2m+1) for g = s^g0 r^g1
GroupPtr make_dihedral_odd(int m);

struct DihedralElement {
  int g0;
  int g1;  // in [-m, m]
  bool operator==(const DihedralElement&) const = default;
};

class DihedralCodec {
 public:
  explicit DihedralCodec(int m) : m_(m) {}
  int m() const { return m_; }
  int n() const { return 2 * m_ + 1; }
  int encode(DihedralElement e) const;
  DihedralElement decode(int index) const;
  int reduce(int x) const;  // representative of x mod 2m+1 in [-m, m]

 private:
  int m_;
};

GroupPtr make_direct_product(const std::vector<GroupPtr>& factors);

// N x| H with (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2); index n + |N| h.
// action[h][n] is the image of n under the automorphism attached to h.
GroupPtr crossed_product(const GroupPtr& N, const GroupPtr& H, const std::vector<std::vector<int>>& action);

class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int index() const { return static_cast<int>(reps_.size()); }
  bool contains(int g) const { return local_[static_cast<std::size_t>(g)] >= 0; }
  int local(int g) const { return local_[static_cast<std::size_t>(g)]; }
  int global(int h) const { return elements_[static_cast<std::size_t>(h)]; }
  const std::vector<int>& coset_reps() const { return reps_; }
  // g = reps[i] * h with h in the subgroup (returned as a parent index)
  std::pair<int, int> decompose(int g) const { return decomp_[static_cast<std::size_t>(g)]; }
  int coset_of(int g) const { return decomp_[static_cast<std::size_t>(g)].first; }
  bool is_normal() const;

  // the subgroup as a group in its own right, local indices
  GroupPtr as_group() const;

  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<int> local_;
  std::vector<int> reps_;
  std::vector<std::pair<int, int>> decomp_;
  mutable GroupPtr as_group_;
};

using SubgroupPtr = std::shared_ptr<const Subgroup>;

inline constexpr int kSubgroupGuard = 256;

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens);
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& G);
// subgroups of G contained in H and normal in H
std::vector<Subgroup> normal_subgroups(const Subgroup& H);
std::vector<Subgroup> normal_subgroups(const GroupPtr& G);

// profile of (element order -> count), used as a cheap isomorphism invariant
std::vector<std::pair<int, int>> order_profile(const FiniteGroup& G);
// explicit isomorphism search; returns phi with phi[g] in H, or empty
std::vector<int> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H);

}  // namespace dwcat
