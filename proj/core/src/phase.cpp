#include "dwcat/phase.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace dwcat {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer in phase: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("phase with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = mod_floor(num, den);
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t r;
  if (__builtin_mul_overflow(a / g, b, &r)) throw std::overflow_error("lcm overflow");
  return r;
}

Phase Phase::operator+(const Phase& o) const {
  if (den_ == o.den_) return Phase(num_ + o.num_, den_);
  std::int64_t l = checked_lcm(den_, o.den_);
  return Phase(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

Phase Phase::operator-() const { return Phase(den_ - num_, den_); }

Phase Phase::operator-(const Phase& o) const { return *this + (-o); }

Phase Phase::times(std::int64_t k) const {
  std::int64_t kk = mod_floor(k, den_);
  return Phase(static_cast<std::int64_t>((static_cast<__int128>(num_) * kk) % den_), den_);
}

std::int64_t Phase::at_modulus(std::int64_t m) const {
  if (m <= 0 || m % den_ != 0)
    throw std::domain_error("phase " + str() + " does not live at modulus " + std::to_string(m));
  return num_ * (m / den_);
}

std::strong_ordering Phase::operator<=>(const Phase& o) const {
  // order by value in [0,1)
  __int128 l = static_cast<__int128>(num_) * o.den_;
  __int128 r = static_cast<__int128>(o.num_) * den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Phase::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Phase Phase::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Phase(parse_int(s), 1);
  return Phase(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace dwcat
