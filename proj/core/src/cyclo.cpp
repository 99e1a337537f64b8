#include "dwcat/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dwcat {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::vector<std::int64_t> compute_cyclotomic(std::int64_t n) {
  // x^n - 1 divided by Phi_d for each proper divisor d
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& q = cyclotomic_polynomial(d);
    std::size_t dq = q.size() - 1;
    std::vector<std::int64_t> quot(p.size() - dq, 0);
    for (std::size_t i = p.size() - 1; i + 1 > dq; --i) {
      std::int64_t c = p[i];  // q is monic
      quot[i - dq] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
      if (i == dq) break;
    }
    p = std::move(quot);
  }
  return p;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::recursive_mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::int64_t> p;
  if (n == 1)
    p = {-1, 1};
  else
    p = compute_cyclotomic(n);
  return cache.emplace(n, std::move(p)).first->second;
}

CycloSum::CycloSum(std::int64_t n) {
  if (n != 0) terms_.emplace_back(Phase(), n);
}

CycloSum::CycloSum(Phase p, std::int64_t coeff) {
  if (coeff != 0) terms_.emplace_back(p, coeff);
}

void CycloSum::add_term(Phase p, std::int64_t c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const Term& t, const Phase& q) { return t.first < q; });
  if (it != terms_.end() && it->first == p) {
    it->second = add_checked(it->second, c);
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term(p, c));
  }
}

CycloSum& CycloSum::operator+=(const CycloSum& o) {
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.cend() || b != o.terms_.cend()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      std::int64_t c = add_checked(a->second, b->second);
      if (c != 0) out.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

CycloSum& CycloSum::operator-=(const CycloSum& o) { return *this += -o; }

CycloSum CycloSum::operator+(const CycloSum& o) const {
  CycloSum r = *this;
  r += o;
  return r;
}

CycloSum CycloSum::operator-(const CycloSum& o) const {
  CycloSum r = *this;
  r -= o;
  return r;
}

CycloSum CycloSum::operator-() const { return scaled(-1); }

CycloSum CycloSum::scaled(std::int64_t k) const {
  CycloSum r;
  if (k == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second = mul_checked(t.second, k);
  return r;
}

CycloSum CycloSum::shifted(Phase p) const {
  if (p.is_zero()) return *this;
  CycloSum r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first + p, t.second);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  return r;
}

CycloSum CycloSum::operator*(const CycloSum& o) const {
  if (terms_.size() == 1 && terms_[0].second == 1) return o.shifted(terms_[0].first);
  if (o.terms_.size() == 1 && o.terms_[0].second == 1) return shifted(o.terms_[0].first);
  CycloSum r;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.add_term(a.first + b.first, mul_checked(a.second, b.second));
  return r;
}

std::int64_t CycloSum::conductor() const {
  std::int64_t m = 1;
  for (const auto& t : terms_) m = checked_lcm(m, t.first.den());
  return m;
}

std::vector<std::int64_t> CycloSum::reduced(std::int64_t M) const {
  if (M % conductor() != 0) throw std::invalid_argument("modulus is not a multiple of the conductor");
  std::vector<std::int64_t> poly(static_cast<std::size_t>(M), 0);
  for (const auto& t : terms_) {
    auto e = static_cast<std::size_t>(t.first.at_modulus(M));
    poly[e] = add_checked(poly[e], t.second);
  }
  const auto& phi = cyclotomic_polynomial(M);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    std::int64_t c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j)
      poly[i - deg + j] = add_checked(poly[i - deg + j], -mul_checked(c, phi[j]));
  }
  poly.resize(deg);
  return poly;
}

bool CycloSum::is_zero() const {
  if (terms_.empty()) return true;
  if (terms_.size() == 1) return false;
  auto r = reduced(conductor());
  return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<std::int64_t> CycloSum::as_integer() const {
  if (terms_.empty()) return 0;
  std::int64_t M = conductor();
  if (M == 1) return terms_[0].second;
  auto r = reduced(M);
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return r.empty() ? 0 : r[0];
}

std::optional<Phase> CycloSum::as_monomial() const {
  if (terms_.size() == 1 && terms_[0].second == 1) return terms_[0].first;
  return std::nullopt;
}

bool CycloSum::operator==(const CycloSum& o) const {
  if (terms_ == o.terms_) return true;
  return (*this - o).is_zero();
}

std::string CycloSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(t.second) + "*e(" + t.first.str() + ")";
  }
  return s;
}

}  // namespace dwcat
