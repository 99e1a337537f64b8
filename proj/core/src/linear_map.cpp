#include "dwcat/linear_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dwcat {

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, CycloSum(1));
  return m;
}

void LinearMap::add(std::size_t src, std::size_t tgt, const CycloSum& c) {
  if (src >= src_ || tgt >= tgt_) throw std::out_of_range("linear map index out of range");
  if (c.empty()) return;
  auto& col = cols_[src];
  auto it = std::lower_bound(col.begin(), col.end(), tgt, [](const Entry& e, std::size_t t) { return e.first < t; });
  if (it != col.end() && it->first == tgt) {
    it->second += c;
    if (it->second.empty()) col.erase(it);
  } else {
    col.insert(it, Entry(tgt, c));
  }
}

CycloSum LinearMap::coeff(std::size_t src, std::size_t tgt) const {
  const auto& col = cols_.at(src);
  auto it = std::lower_bound(col.begin(), col.end(), tgt, [](const Entry& e, std::size_t t) { return e.first < t; });
  if (it != col.end() && it->first == tgt) return it->second;
  return CycloSum();
}

LinearMap LinearMap::scaled(const CycloSum& c) const {
  LinearMap r(src_, tgt_);
  for (std::size_t j = 0; j < src_; ++j)
    for (const auto& [t, v] : cols_[j]) r.add(j, t, v * c);
  return r;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_) throw std::invalid_argument("linear map shape mismatch");
  LinearMap r = *this;
  for (std::size_t j = 0; j < src_; ++j)
    for (const auto& [t, v] : o.cols_[j]) r.add(j, t, v);
  return r;
}

std::size_t LinearMap::first_difference(const LinearMap& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_) return 0;
  for (std::size_t j = 0; j < src_; ++j) {
    const auto& a = cols_[j];
    const auto& b = o.cols_[j];
    if (a == b) continue;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        if (!ia->second.is_zero()) return j;
        ++ia;
      } else if (ia == a.end() || ib->first < ia->first) {
        if (!ib->second.is_zero()) return j;
        ++ib;
      } else {
        if (ia->second != ib->second) return j;
        ++ia;
        ++ib;
      }
    }
  }
  return src_;
}

bool LinearMap::operator==(const LinearMap& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_) return false;
  return first_difference(o) == src_;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.tgt_dim() != g.src_dim()) throw std::invalid_argument("composition dimension mismatch");
  LinearMap r(f.src_dim(), g.tgt_dim());
  for (std::size_t j = 0; j < f.src_dim(); ++j)
    for (const auto& [mid, c] : f.column(j))
      for (const auto& [t, d] : g.column(mid)) r.add(j, t, c * d);
  return r;
}

LinearMap operator*(const LinearMap& g, const LinearMap& f) { return compose(g, f); }

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  const std::size_t s2 = g.src_dim(), t2 = g.tgt_dim();
  LinearMap r(f.src_dim() * s2, f.tgt_dim() * t2);
  for (std::size_t i = 0; i < f.src_dim(); ++i)
    for (std::size_t j = 0; j < s2; ++j)
      for (const auto& [a, c] : f.column(i))
        for (const auto& [b, d] : g.column(j)) r.add(i * s2 + j, a * t2 + b, c * d);
  return r;
}

}  // namespace dwcat
