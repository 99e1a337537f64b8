#include "dwcat/snf.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace dwcat {

using BigInt = boost::multiprecision::cpp_int;

namespace {

struct ExtGcd {
  std::int64_t g, s, t;
};

// s*a + t*b = g = gcd(a, b) >= 0
ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  for (const auto& r : init) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  std::vector<__int128> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      __int128 a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (__builtin_add_overflow(acc[j], a * o(k, j), &acc[j])) throw std::overflow_error("integer matrix overflow");
    }
    for (std::size_t j = 0; j < o.cols_; ++j) {
      if (acc[j] > std::numeric_limits<std::int64_t>::max() || acc[j] < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer matrix overflow");
      r(i, j) = static_cast<std::int64_t>(acc[j]);
    }
  }
  return r;
}

bool IntMatrix::is_zero() const {
  for (auto v : a_)
    if (v != 0) return false;
  return true;
}

std::int64_t IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // fraction-free Bareiss elimination
  std::vector<BigInt> m(a_.begin(), a_.end());
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  BigInt d = sign * at(n - 1, n - 1);
  if (d > std::numeric_limits<std::int64_t>::max() || d < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("determinant overflow");
  return static_cast<std::int64_t>(d);
}

std::vector<std::int64_t> SnfResult::diagonal() const {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// dense matrix over arbitrary-precision integers, used by the integer SNF where the
// transforms can outgrow 64 bits mid-computation
struct BigMatrix {
  std::size_t r, c;
  std::vector<BigInt> a;
  BigMatrix(const IntMatrix& m) : r(m.rows()), c(m.cols()), a(r * c) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a[i * c + j] = m(i, j);
  }
  BigInt& operator()(std::size_t i, std::size_t j) { return a[i * c + j]; }
  void row_axpy(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < c; ++j) a[dst * c + j] += q * a[src * c + j];
  }
  void col_axpy(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < r; ++i) a[i * c + dst] += q * a[i * c + src];
  }
  void row_swap(std::size_t x, std::size_t y) {
    if (x != y)
      for (std::size_t j = 0; j < c; ++j) std::swap(a[x * c + j], a[y * c + j]);
  }
  void col_swap(std::size_t x, std::size_t y) {
    if (x != y)
      for (std::size_t i = 0; i < r; ++i) std::swap(a[i * c + x], a[i * c + y]);
  }
  IntMatrix narrow() const {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const BigInt& v = a[i * c + j];
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
          throw std::overflow_error("integer SNF overflow");
        m(i, j) = static_cast<std::int64_t>(v);
      }
    return m;
  }
};

// nearest-integer quotient, keeping remainders in (-|b|/2, |b|/2]
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, rem = a - q * b;
  BigInt ab = abs(b);
  if (2 * abs(rem) > ab) q += (rem < 0) == (b < 0) ? 1 : -1;
  return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& A) {
  const std::size_t r = A.rows(), c = A.cols();
  BigMatrix D(A), U(IntMatrix::identity(r)), V(IntMatrix::identity(c));
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    bool done = false;
    for (;;) {
      std::size_t pi = r, pj = c;
      BigInt best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          BigInt v = abs(D(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) {
        done = true;
        break;
      }
      D.row_swap(t, pi);
      U.row_swap(t, pi);
      D.col_swap(t, pj);
      V.col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        BigInt q = -round_div(D(i, t), D(t, t));
        D.row_axpy(i, t, q);
        U.row_axpy(i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        BigInt q = -round_div(D(t, j), D(t, t));
        D.col_axpy(j, t, q);
        V.col_axpy(j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      D.row_axpy(t, bad, 1);
      U.row_axpy(t, bad, 1);
    }
    if (done) break;
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < r; ++j) U(t, j) = -U(t, j);
    }
  }
  return {U.narrow(), D.narrow(), V.narrow()};
}

std::int64_t mod_norm(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(mod_norm(static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m), m));
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  ExtGcd e = ext_gcd(mod_norm(a, m), m);
  if (e.g != 1) throw std::domain_error("not a unit modulo " + std::to_string(m));
  return mod_norm(e.s, m);
}

namespace {

// Working state for the modular Smith form with optional transform tracking.
class ModSnf {
 public:
  ModSnf(IntMatrix A, std::int64_t K, unsigned track) : A_(std::move(A)), K_(K), track_(track) {
    for (std::size_t i = 0; i < A_.rows(); ++i)
      for (std::size_t j = 0; j < A_.cols(); ++j) A_(i, j) = mod_norm(A_(i, j), K_);
    if (track_ & kTrackRows) {
      P_ = IntMatrix::identity(A_.rows());
      if (track_ & kTrackInverses) Pinv_ = IntMatrix::identity(A_.rows());
    }
    if (track_ & kTrackCols) {
      Q_ = IntMatrix::identity(A_.cols());
      if (track_ & kTrackInverses) Qinv_ = IntMatrix::identity(A_.cols());
    }
  }

  ModSnfResult run() {
    const std::size_t r = A_.rows(), c = A_.cols();
    ModSnfResult res;
    res.modulus = K_;
    std::size_t n = std::min(r, c);
    res.diag.assign(n, K_);
    for (std::size_t t = 0; t < n; ++t) {
      if (!reduce_at(t)) break;
      res.diag[t] = A_(t, t);
    }
    res.P = std::move(P_);
    res.Pinv = std::move(Pinv_);
    res.Q = std::move(Q_);
    res.Qinv = std::move(Qinv_);
    return res;
  }

 private:
  std::int64_t ideal(std::int64_t a) const { return std::gcd(a, K_); }

  // rows (i, j) <- (a*row_i + b*row_j, c*row_i + d*row_j); ad - bc a unit
  void rows2(std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    combine_rows(A_, i, j, a, b, c, d);
    if (track_ & kTrackRows) {
      combine_rows(P_, i, j, a, b, c, d);
      if (track_ & kTrackInverses) {
        std::int64_t di = mod_inverse(mod_norm(a * d - b * c, K_), K_);
        combine_cols(Pinv_, i, j, mod_mul(d, di, K_), mod_mul(-c, di, K_), mod_mul(-b, di, K_),
                     mod_mul(a, di, K_));
      }
    }
  }

  // cols (i, j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
  void cols2(std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    combine_cols(A_, i, j, a, b, c, d);
    if (track_ & kTrackCols) {
      combine_cols(Q_, i, j, a, b, c, d);
      if (track_ & kTrackInverses) {
        std::int64_t di = mod_inverse(mod_norm(a * d - b * c, K_), K_);
        combine_rows(Qinv_, i, j, mod_mul(d, di, K_), mod_mul(-c, di, K_), mod_mul(-b, di, K_),
                     mod_mul(a, di, K_));
      }
    }
  }

  void combine_rows(IntMatrix& M, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c,
                    std::int64_t d) const {
    for (std::size_t k = 0; k < M.cols(); ++k) {
      std::int64_t x = M(i, k), y = M(j, k);
      if (x == 0 && y == 0) continue;
      M(i, k) = mod_norm(mod_mul(a, x, K_) + mod_mul(b, y, K_), K_);
      if (i != j) M(j, k) = mod_norm(mod_mul(c, x, K_) + mod_mul(d, y, K_), K_);
    }
  }

  void combine_cols(IntMatrix& M, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c,
                    std::int64_t d) const {
    for (std::size_t k = 0; k < M.rows(); ++k) {
      std::int64_t x = M(k, i), y = M(k, j);
      if (x == 0 && y == 0) continue;
      M(k, i) = mod_norm(mod_mul(a, x, K_) + mod_mul(b, y, K_), K_);
      if (i != j) M(k, j) = mod_norm(mod_mul(c, x, K_) + mod_mul(d, y, K_), K_);
    }
  }

  // q with q * p == a (mod K), assuming gcd(p, K) | a
  std::int64_t quotient(std::int64_t a, std::int64_t p) const {
    std::int64_t g = ideal(p);
    std::int64_t Kg = K_ / g;
    return mod_mul((a / g) % Kg, mod_inverse((p / g) % Kg, Kg), Kg);
  }

  // eliminate entry (i, t) against pivot (t, t) with row operations
  void clear_row_entry(std::size_t t, std::size_t i) {
    std::int64_t p = A_(t, t), a = A_(i, t);
    if (a % ideal(p) == 0) {
      std::int64_t q = quotient(a, p);
      rows2(i, t, 1, mod_norm(-q, K_), 0, 1);
    } else {
      ExtGcd e = ext_gcd(p, a);
      rows2(t, i, mod_norm(e.s, K_), mod_norm(e.t, K_), mod_norm(-(a / e.g), K_), mod_norm(p / e.g, K_));
    }
  }

  void clear_col_entry(std::size_t t, std::size_t j) {
    std::int64_t p = A_(t, t), a = A_(t, j);
    if (a % ideal(p) == 0) {
      std::int64_t q = quotient(a, p);
      cols2(j, t, 1, mod_norm(-q, K_), 0, 1);
    } else {
      ExtGcd e = ext_gcd(p, a);
      cols2(t, j, mod_norm(e.s, K_), mod_norm(e.t, K_), mod_norm(-(a / e.g), K_), mod_norm(p / e.g, K_));
    }
  }

  bool reduce_at(std::size_t t) {
    const std::size_t r = A_.rows(), c = A_.cols();
    std::size_t pi = r, pj = c;
    std::int64_t best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        std::int64_t v = A_(i, j);
        if (v == 0) continue;
        std::int64_t g = ideal(v);
        if (best == 0 || g < best) {
          best = g;
          pi = i;
          pj = j;
          if (g == 1) goto found;
        }
      }
  found:
    if (best == 0) return false;
    if (pi != t) rows2(t, pi, 0, 1, 1, 0);
    if (pj != t) cols2(t, pj, 0, 1, 1, 0);

    for (;;) {
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < r; ++i)
          if (A_(i, t) != 0) clear_row_entry(t, i);
        for (std::size_t j = t + 1; j < c; ++j)
          if (A_(t, j) != 0) clear_col_entry(t, j);
        for (std::size_t i = t + 1; i < r; ++i)
          if (A_(i, t) != 0) dirty = true;
      }
      std::int64_t g = ideal(A_(t, t));
      std::size_t bad = r;
      if (g != 1)
        for (std::size_t i = t + 1; i < r && bad == r; ++i)
          for (std::size_t j = t + 1; j < c; ++j)
            if (A_(i, j) % g != 0) {
              bad = i;
              break;
            }
      if (bad == r) break;
      rows2(t, bad, 1, 1, 0, 1);
    }

    // scale the pivot to gcd(pivot, K)
    std::int64_t p = A_(t, t);
    std::int64_t g = ideal(p);
    if (p != g) {
      std::int64_t Kg = K_ / g;
      std::int64_t u = (p / g) % Kg;
      while (std::gcd(u, K_) != 1) u += Kg;
      rows2(t, t, mod_inverse(u, K_), 0, 0, 1);
    }
    return true;
  }

  IntMatrix A_;
  std::int64_t K_;
  unsigned track_;
  IntMatrix P_, Pinv_, Q_, Qinv_;
};

}  // namespace

ModSnfResult smith_normal_form_mod(IntMatrix A, std::int64_t K, unsigned track) {
  if (K < 1) throw std::invalid_argument("modulus must be positive");
  return ModSnf(std::move(A), K, track).run();
}

}  // namespace dwcat
