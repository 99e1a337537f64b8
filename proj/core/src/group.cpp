#include "dwcat/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace dwcat {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : n_(static_cast<int>(table.size())) {
  if (n_ == 0) throw std::invalid_argument("group table is empty");
  table_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("group table is not square");
    for (int x : row) {
      if (x < 0 || x >= n_) throw std::invalid_argument("group table entry out of range");
      table_.push_back(x);
    }
  }
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw std::invalid_argument("element 0 is not the identity");
  inv_.assign(static_cast<std::size_t>(n_), -1);
  for (int a = 0; a < n_; ++a) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int b = 0; b < n_; ++b) {
      int c = mul(a, b);
      if (seen[static_cast<std::size_t>(c)]) throw std::invalid_argument("group table is not a Latin square");
      seen[static_cast<std::size_t>(c)] = 1;
      if (c == 0) inv_[static_cast<std::size_t>(a)] = b;
    }
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < n_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw std::invalid_argument("group table is not associative");
    }
  if (labels.empty()) {
    for (int a = 0; a < n_; ++a) labels.push_back(std::to_string(a));
  } else if (static_cast<int>(labels.size()) != n_) {
    throw std::invalid_argument("label count does not match group order");
  }
  labels_ = std::move(labels);
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[static_cast<std::size_t>(a)].push_back(mul(a, b));
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return std::make_shared<FiniteGroup>(std::move(t));
}

int DihedralCodec::reduce(int x) const {
  int k = n();
  int r = ((x % k) + k) % k;
  return r > m_ ? r - k : r;
}

int DihedralCodec::encode(DihedralElement e) const {
  if (e.g0 < 0 || e.g0 > 1) throw std::invalid_argument("dihedral g0 must be 0 or 1");
  return e.g0 * n() + ((e.g1 % n()) + n()) % n();
}

DihedralElement DihedralCodec::decode(int index) const { return {index / n(), reduce(index % n())}; }

GroupPtr make_dihedral_odd(int m) {
  if (m < 1) throw std::invalid_argument("dihedral parameter m must be positive");
  DihedralCodec codec(m);
  const int order = 2 * codec.n();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  std::vector<std::string> labels;
  for (int a = 0; a < order; ++a) {
    DihedralElement x = codec.decode(a);
    for (int b = 0; b < order; ++b) {
      DihedralElement y = codec.decode(b);
      // s^a0 r^a1 s^b0 r^b1 = s^(a0+b0) r^((-1)^b0 a1 + b1)
      int sign = y.g0 ? -1 : 1;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          codec.encode({(x.g0 + y.g0) % 2, codec.reduce(sign * x.g1 + y.g1)});
    }
    std::string l;
    if (x.g0) l += "s";
    if (x.g1 == 1) l += "r";
    else if (x.g1 != 0) l += "r^" + std::to_string(x.g1);
    labels.push_back(l.empty() ? "e" : l);
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels));
}

GroupPtr crossed_product(const GroupPtr& N, const GroupPtr& H, const std::vector<std::vector<int>>& action) {
  const int n = N->order(), h = H->order();
  if (static_cast<int>(action.size()) != h) throw std::invalid_argument("action must list one map per element of H");
  for (int x = 0; x < h; ++x) {
    const auto& phi = action[static_cast<std::size_t>(x)];
    if (static_cast<int>(phi.size()) != n) throw std::invalid_argument("action map has wrong length");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
      int v = phi[static_cast<std::size_t>(a)];
      if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) throw std::invalid_argument("action map is not a bijection");
      hit[static_cast<std::size_t>(v)] = 1;
      for (int b = 0; b < n; ++b)
        if (phi[static_cast<std::size_t>(N->mul(a, b))] != N->mul(v, phi[static_cast<std::size_t>(b)]))
          throw std::invalid_argument("action map is not an automorphism");
    }
  }
  for (int x = 0; x < h; ++x)
    for (int y = 0; y < h; ++y)
      for (int a = 0; a < n; ++a) {
        int lhs = action[static_cast<std::size_t>(H->mul(x, y))][static_cast<std::size_t>(a)];
        int rhs = action[static_cast<std::size_t>(x)][static_cast<std::size_t>(action[static_cast<std::size_t>(y)][static_cast<std::size_t>(a)])];
        if (lhs != rhs) throw std::invalid_argument("action is not a homomorphism");
      }
  const int order = n * h;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  std::vector<std::string> labels;
  for (int p = 0; p < order; ++p) {
    int n1 = p % n, h1 = p / n;
    for (int q = 0; q < order; ++q) {
      int n2 = q % n, h2 = q / n;
      int nn = N->mul(n1, action[static_cast<std::size_t>(h1)][static_cast<std::size_t>(n2)]);
      t[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = nn + n * H->mul(h1, h2);
    }
    labels.push_back("(" + N->label(n1) + "," + H->label(h1) + ")");
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels));
}

GroupPtr make_direct_product(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) return make_cyclic(1);
  GroupPtr acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const GroupPtr& H = factors[i];
    std::vector<std::vector<int>> trivial(static_cast<std::size_t>(H->order()));
    for (auto& phi : trivial)
      for (int a = 0; a < acc->order(); ++a) phi.push_back(a);
    acc = crossed_product(acc, H, trivial);
  }
  return acc;
}

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      int x = G.mul(elems[i], g);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements) : parent_(std::move(parent)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int n = parent_->order();
  for (int g : elements)
    if (g < 0 || g >= n) throw std::invalid_argument("subgroup element out of range");
  if (elements.empty() || elements[0] != 0) throw std::invalid_argument("subgroup must contain the identity");
  if (closure(*parent_, elements) != elements) throw std::invalid_argument("subset is not closed under multiplication");
  elements_ = std::move(elements);
  local_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) local_[static_cast<std::size_t>(elements_[i])] = static_cast<int>(i);
  decomp_.assign(static_cast<std::size_t>(n), {-1, -1});
  for (int g = 0; g < n; ++g) {
    if (decomp_[static_cast<std::size_t>(g)].first >= 0) continue;
    int i = static_cast<int>(reps_.size());
    reps_.push_back(g);
    for (int h : elements_) decomp_[static_cast<std::size_t>(parent_->mul(g, h))] = {i, h};
  }
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent_->order(); ++g)
    for (int h : elements_)
      if (!contains(parent_->conj(g, h))) return false;
  return true;
}

GroupPtr Subgroup::as_group() const {
  if (as_group_) return as_group_;
  const std::size_t k = elements_.size();
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) t[a][b] = local(parent_->mul(elements_[a], elements_[b]));
    labels.push_back(parent_->label(elements_[a]));
  }
  as_group_ = std::make_shared<FiniteGroup>(std::move(t), std::move(labels));
  return as_group_;
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& G) {
  if (G->order() > kSubgroupGuard)
    throw std::length_error("subgroup enumeration is limited to groups of order " + std::to_string(kSubgroupGuard));
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  for (int g = 0; g < G->order(); ++g) {
    auto c = closure(*G, {g});
    if (found.insert(c).second) frontier.push_back(c);
  }
  std::vector<std::vector<int>> cyclic(frontier);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier)
      for (const auto& c : cyclic) {
        if (std::includes(a.begin(), a.end(), c.begin(), c.end())) continue;
        std::vector<int> gens = a;
        gens.insert(gens.end(), c.begin(), c.end());
        auto j = closure(*G, gens);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> all(found.begin(), found.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  for (auto& s : all) out.emplace_back(G, std::move(s));
  return out;
}

std::vector<Subgroup> normal_subgroups(const Subgroup& H) {
  const GroupPtr& G = H.parent();
  std::vector<Subgroup> out;
  for (auto& K : enumerate_subgroups(G)) {
    if (!std::includes(H.elements().begin(), H.elements().end(), K.elements().begin(), K.elements().end())) continue;
    bool normal = true;
    for (int h : H.elements())
      for (int k : K.elements())
        if (normal && !K.contains(G->conj(h, k))) normal = false;
    if (normal) out.push_back(std::move(K));
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& G) {
  std::vector<int> all(static_cast<std::size_t>(G->order()));
  for (int i = 0; i < G->order(); ++i) all[static_cast<std::size_t>(i)] = i;
  return normal_subgroups(Subgroup(G, all));
}

std::vector<std::pair<int, int>> order_profile(const FiniteGroup& G) {
  std::map<int, int> counts;
  for (int g = 0; g < G.order(); ++g) ++counts[G.element_order(g)];
  return {counts.begin(), counts.end()};
}

std::vector<int> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.order() != H.order() || order_profile(G) != order_profile(H)) return {};
  // greedy generating set of G
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int g = 0; g < G.order() && static_cast<int>(span.size()) < G.order(); ++g) {
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = closure(G, gens);
  }
  std::vector<int> images(gens.size(), -1);
  std::function<std::vector<int>(std::size_t)> search = [&](std::size_t k) -> std::vector<int> {
    if (k == gens.size()) {
      // extend along words in the generators and check consistency
      std::vector<int> phi(static_cast<std::size_t>(G.order()), -1);
      phi[0] = 0;
      std::vector<int> queue{0};
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          int x = G.mul(queue[i], gens[j]);
          int y = H.mul(phi[static_cast<std::size_t>(queue[i])], images[j]);
          if (phi[static_cast<std::size_t>(x)] < 0) {
            phi[static_cast<std::size_t>(x)] = y;
            queue.push_back(x);
          } else if (phi[static_cast<std::size_t>(x)] != y) {
            return {};
          }
        }
      std::vector<char> hit(static_cast<std::size_t>(H.order()), 0);
      for (int v : phi) {
        if (v < 0 || hit[static_cast<std::size_t>(v)]) return {};
        hit[static_cast<std::size_t>(v)] = 1;
      }
      for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
          if (phi[static_cast<std::size_t>(G.mul(a, b))] != H.mul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]))
            return {};
      return phi;
    }
    int ord = G.element_order(gens[k]);
    for (int y = 0; y < H.order(); ++y) {
      if (H.element_order(y) != ord) continue;
      images[k] = y;
      auto r = search(k + 1);
      if (!r.empty()) return r;
    }
    return {};
  };
  return search(0);
}

}  // namespace dwcat
