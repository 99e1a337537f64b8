#include "dwcat/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dwcat {

void SparseSystem::add_row(Row coeffs, std::int64_t rhs) {
  std::sort(coeffs.begin(), coeffs.end());
  Row merged;
  for (const auto& [c, v] : coeffs) {
    if (c >= num_vars_) throw std::out_of_range("variable index out of range");
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, v);
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  rows_.push_back(std::move(merged));
  rhs_.push_back(rhs);
}

SparseSystem SparseSystem::from_dense(const IntMatrix& A, const std::vector<std::int64_t>& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("dimension mismatch between matrix and right-hand side");
  SparseSystem s(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Row r;
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0) r.emplace_back(j, A(i, j));
    s.add_row(std::move(r), b[i]);
  }
  return s;
}

namespace {

using Row = SparseSystem::Row;

// Gauss-Jordan elimination with unit pivots over Z/K. What is left has no
// unit entries and is handed to the dense Smith form.
struct Eliminated {
  std::vector<std::size_t> pivot_cols;
  std::vector<Row> pivot_rows;  // pivot coefficient 1, other columns non-pivot
  std::vector<std::int64_t> pivot_rhs;
  std::vector<Row> rest_rows;
  std::vector<std::int64_t> rest_rhs;
  std::vector<char> is_pivot;
  bool inconsistent = false;
};

Row axpy(const Row& dst, const Row& src, std::int64_t q, std::int64_t K) {
  Row out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin(), b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == dst.end() || b->first < a->first) {
      std::int64_t v = mod_mul(q, b->second, K);
      if (v != 0) out.emplace_back(b->first, v);
      ++b;
    } else {
      std::int64_t v = mod_norm(a->second + mod_mul(q, b->second, K), K);
      if (v != 0) out.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  return out;
}

std::int64_t coeff_of(const Row& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : 0;
}

Eliminated eliminate(const SparseSystem& sys, std::int64_t K) {
  const std::size_t n = sys.num_vars();
  std::vector<Row> rows;
  std::vector<std::int64_t> rhs;
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    Row r;
    for (const auto& [c, v] : sys.row(i)) {
      std::int64_t w = mod_norm(v, K);
      if (w != 0) r.emplace_back(c, w);
    }
    rows.push_back(std::move(r));
    rhs.push_back(mod_norm(sys.rhs(i), K));
  }
  std::vector<std::vector<std::size_t>> occ(n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& e : rows[i]) occ[e.first].push_back(i);

  Eliminated out;
  out.is_pivot.assign(n, 0);
  std::vector<char> is_pivot_row(rows.size(), 0);

  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });

  auto try_pivot = [&](std::size_t ri) -> bool {
    const Row& r = rows[ri];
    std::size_t best = n;
    std::size_t best_occ = 0;
    for (const auto& [c, v] : r) {
      if (std::gcd(v, K) != 1) continue;
      if (best == n || occ[c].size() < best_occ) {
        best = c;
        best_occ = occ[c].size();
      }
    }
    if (best == n) return false;
    std::int64_t inv = mod_inverse(coeff_of(r, best), K);
    for (auto& e : rows[ri]) e.second = mod_mul(e.second, inv, K);
    rhs[ri] = mod_mul(rhs[ri], inv, K);
    out.is_pivot[best] = 1;
    is_pivot_row[ri] = 1;
    std::vector<std::size_t> touching = occ[best];
    for (std::size_t rj : touching) {
      if (rj == ri) continue;
      std::int64_t v = coeff_of(rows[rj], best);
      if (v == 0) continue;
      Row before = std::move(rows[rj]);
      rows[rj] = axpy(before, rows[ri], K - v, K);
      rhs[rj] = mod_norm(rhs[rj] + mod_mul(K - v, rhs[ri], K), K);
      // register fill-in
      std::size_t k = 0;
      for (const auto& e : rows[rj]) {
        while (k < before.size() && before[k].first < e.first) ++k;
        if (k >= before.size() || before[k].first != e.first) occ[e.first].push_back(rj);
      }
    }
    occ[best] = {ri};
    out.pivot_cols.push_back(best);
    return true;
  };

  std::vector<std::size_t> pivot_ids;
  auto pivot_and_record = [&](std::size_t ri) {
    bool ok = try_pivot(ri);
    if (ok) pivot_ids.push_back(ri);
    return ok;
  };

  std::vector<std::size_t> pending;
  for (std::size_t ri : order) {
    if (rows[ri].empty()) continue;
    if (!pivot_and_record(ri)) pending.push_back(ri);
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> still;
    for (std::size_t ri : pending) {
      if (rows[ri].empty()) continue;
      if (pivot_and_record(ri))
        changed = true;
      else
        still.push_back(ri);
    }
    pending = std::move(still);
  }

  for (std::size_t k = 0; k < pivot_ids.size(); ++k) {
    out.pivot_rows.push_back(rows[pivot_ids[k]]);
    out.pivot_rhs.push_back(rhs[pivot_ids[k]]);
  }
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    if (is_pivot_row[ri]) continue;
    if (rows[ri].empty()) {
      if (rhs[ri] != 0) out.inconsistent = true;
      continue;
    }
    out.rest_rows.push_back(rows[ri]);
    out.rest_rhs.push_back(rhs[ri]);
  }
  return out;
}

struct Block {
  std::vector<std::size_t> cols;
  IntMatrix R;
};

Block make_block(const Eliminated& e, std::size_t n) {
  std::vector<char> used(n, 0);
  for (const auto& r : e.rest_rows)
    for (const auto& x : r) used[x.first] = 1;
  Block b;
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    if (used[c]) {
      pos[c] = b.cols.size();
      b.cols.push_back(c);
    }
  b.R = IntMatrix(e.rest_rows.size(), b.cols.size());
  for (std::size_t i = 0; i < e.rest_rows.size(); ++i)
    for (const auto& x : e.rest_rows[i]) b.R(i, pos[x.first]) = x.second;
  return b;
}

}  // namespace

std::vector<std::int64_t> AffineSolutionSet::invariant_factors() const {
  return orders_to_invariant_factors(orders_);
}

std::optional<std::uint64_t> AffineSolutionSet::cardinality() const {
  std::uint64_t c = 1;
  for (auto o : orders_)
    if (__builtin_mul_overflow(c, static_cast<std::uint64_t>(o), &c)) return std::nullopt;
  return c;
}

std::vector<std::int64_t> AffineSolutionSet::element(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() != generators_.size()) throw std::invalid_argument("coefficient count mismatch");
  std::vector<std::int64_t> x = particular_;
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (coeffs[g] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (generators_[g][j] != 0) x[j] = mod_norm(x[j] + mod_mul(coeffs[g], generators_[g][j], modulus_), modulus_);
  }
  return x;
}

std::vector<std::int64_t> AffineSolutionSet::coordinates(const std::vector<std::int64_t>& v) const {
  if (v.size() != num_vars()) throw std::invalid_argument("vector length mismatch");
  std::vector<std::int64_t> y(block_cols_.size(), 0);
  for (std::size_t i = 0; i < block_cols_.size(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < block_cols_.size(); ++j)
      acc = mod_norm(acc + mod_mul(block_qinv_(i, j), v[block_cols_[j]], modulus_), modulus_);
    y[i] = acc;
  }
  std::vector<std::int64_t> k(sources_.size(), 0);
  for (std::size_t g = 0; g < sources_.size(); ++g) {
    const auto& s = sources_[g];
    std::int64_t val = s.from_block ? y[s.index] : mod_norm(v[s.index], modulus_);
    if (val % s.step != 0) throw std::domain_error("vector is not in the solution kernel");
    k[g] = mod_norm(val / s.step, orders_[g]);
  }
  return k;
}

void AffineSolutionSet::for_each(const std::function<void(const std::vector<std::int64_t>&)>& fn) const {
  std::vector<std::int64_t> k(orders_.size(), 0);
  for (;;) {
    fn(element(k));
    std::size_t i = 0;
    while (i < k.size()) {
      if (++k[i] < orders_[i]) break;
      k[i] = 0;
      ++i;
    }
    if (i == k.size()) return;
  }
}

std::optional<AffineSolutionSet> solve_affine_mod(const SparseSystem& sys, std::int64_t M) {
  if (M < 2) throw std::invalid_argument("modulus must be at least 2");
  const std::size_t n = sys.num_vars();
  Eliminated e = eliminate(sys, M);
  if (e.inconsistent) return std::nullopt;
  Block b = make_block(e, n);
  ModSnfResult snf = smith_normal_form_mod(b.R, M, kTrackRows | kTrackCols | kTrackInverses);

  const std::size_t nb = b.cols.size(), nr = b.R.rows();
  std::vector<std::int64_t> c(nr, 0);
  for (std::size_t i = 0; i < nr; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < nr; ++j) acc = mod_norm(acc + mod_mul(snf.P(i, j), e.rest_rhs[j], M), M);
    c[i] = acc;
  }

  AffineSolutionSet out;
  out.modulus_ = M;
  out.block_cols_ = b.cols;
  out.block_qinv_ = snf.Qinv;

  std::vector<std::int64_t> y(nb, 0);
  struct YGen {
    std::size_t index;
    std::int64_t step, order;
  };
  std::vector<YGen> ygens;
  const std::size_t dn = std::min(nr, nb);
  for (std::size_t i = 0; i < dn; ++i) {
    std::int64_t d = snf.diag[i] == M ? 0 : snf.diag[i];
    std::int64_t g = std::gcd(d, M);
    if (c[i] % g != 0) return std::nullopt;
    if (g != M) {
      std::int64_t Mg = M / g;
      y[i] = mod_mul((c[i] / g) % Mg, mod_inverse((d / g) % Mg, Mg), Mg);
    }
    if (g > 1) ygens.push_back({i, M / g, g});
  }
  for (std::size_t i = dn; i < nr; ++i)
    if (c[i] != 0) return std::nullopt;
  for (std::size_t i = dn; i < nb; ++i) ygens.push_back({i, 1, M});

  auto lift = [&](const std::vector<std::int64_t>& yv, const std::vector<std::int64_t>& base,
                  std::vector<std::int64_t>& x) {
    for (std::size_t j = 0; j < nb; ++j) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < nb; ++i)
        if (yv[i] != 0) acc = mod_norm(acc + mod_mul(snf.Q(j, i), yv[i], M), M);
      x[b.cols[j]] = acc;
    }
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      std::int64_t acc = base[k];
      for (const auto& [col, v] : e.pivot_rows[k])
        if (col != e.pivot_cols[k]) acc = mod_norm(acc - mod_mul(v, x[col], M), M);
      x[e.pivot_cols[k]] = acc;
    }
  };

  out.particular_.assign(n, 0);
  lift(y, e.pivot_rhs, out.particular_);

  const std::vector<std::int64_t> zero_base(e.pivot_cols.size(), 0);
  for (const auto& g : ygens) {
    std::vector<std::int64_t> yv(nb, 0);
    yv[g.index] = g.step;
    std::vector<std::int64_t> x(n, 0);
    lift(yv, zero_base, x);
    out.generators_.push_back(std::move(x));
    out.orders_.push_back(g.order);
    out.sources_.push_back({true, g.index, g.step});
  }
  std::vector<char> in_block(n, 0);
  for (auto col : b.cols) in_block[col] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (e.is_pivot[col] || in_block[col]) continue;
    std::vector<std::int64_t> x(n, 0);
    x[col] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      std::int64_t v = coeff_of(e.pivot_rows[k], col);
      if (v != 0) x[e.pivot_cols[k]] = mod_norm(-v, M);
    }
    out.generators_.push_back(std::move(x));
    out.orders_.push_back(M);
    out.sources_.push_back({false, col, 1});
  }
  return out;
}

std::optional<AffineSolutionSet> solve_affine_mod(const IntMatrix& A, const std::vector<std::int64_t>& b,
                                                  std::int64_t M) {
  return solve_affine_mod(SparseSystem::from_dense(A, b), M);
}

std::vector<std::int64_t> invariant_factors_mod(const SparseSystem& sys, std::int64_t K) {
  SparseSystem homog(sys.num_vars());
  for (std::size_t i = 0; i < sys.num_rows(); ++i) homog.add_row(sys.row(i), 0);
  Eliminated e = eliminate(homog, K);
  Block b = make_block(e, sys.num_vars());
  ModSnfResult snf = smith_normal_form_mod(b.R, K);
  std::vector<std::int64_t> d(e.pivot_cols.size(), 1 % K == 0 ? K : 1);
  for (auto v : snf.diag) d.push_back(v);
  std::size_t total = std::min(sys.num_rows(), sys.num_vars());
  while (d.size() < total) d.push_back(K);
  std::stable_sort(d.begin(), d.end());
  return d;
}

std::vector<std::int64_t> orders_to_invariant_factors(const std::vector<std::int64_t>& orders) {
  // split into prime powers, then recombine the largest powers first
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (auto o : orders) {
    std::int64_t x = o;
    for (std::int64_t p = 2; p * p <= x; ++p) {
      if (x % p) continue;
      std::int64_t q = 1;
      while (x % p == 0) {
        x /= p;
        q *= p;
      }
      by_prime[p].push_back(q);
    }
    if (x > 1) by_prime[x].push_back(x);
  }
  std::size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  std::vector<std::int64_t> inv(len, 1);
  for (const auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) inv[len - 1 - i] *= v[i];
  return inv;
}

}  // namespace dwcat
