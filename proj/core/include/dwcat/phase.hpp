#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace dwcat {

// An element of Q/Z, stored as a reduced fraction num/den with 0 <= num < den.
// The root of unity exp(2 pi i num/den) in additive notation.
class Phase {
 public:
  constexpr Phase() = default;
  Phase(std::int64_t num, std::int64_t den);

  static Phase zero() { return Phase(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Phase operator+(const Phase& o) const;
  Phase operator-(const Phase& o) const;
  Phase operator-() const;
  Phase& operator+=(const Phase& o) { return *this = *this + o; }
  Phase& operator-=(const Phase& o) { return *this = *this - o; }
  Phase times(std::int64_t k) const;

  // Exponent at modulus m, i.e. the residue r with Phase == r/m. Throws if
  // den does not divide m.
  std::int64_t at_modulus(std::int64_t m) const;

  bool operator==(const Phase&) const = default;
  std::strong_ordering operator<=>(const Phase& o) const;

  std::string str() const;
  static Phase parse(std::string_view s);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace dwcat

template <>
struct std::hash<dwcat::Phase> {
  std::size_t operator()(const dwcat::Phase& p) const noexcept {
    return std::hash<std::int64_t>()(p.num() * 1000003 + p.den());
  }
};
