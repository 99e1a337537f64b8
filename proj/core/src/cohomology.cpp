#include "dwcat/cohomology.hpp"

#include <numeric>
#include <stdexcept>

namespace dwcat {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// advance a mixed-radix tuple with digits in [lo, n); false on wrap
bool next_tuple(std::vector<int>& t, int lo, int n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < n) return true;
    t[i] = lo;
  }
  return false;
}

constexpr std::size_t kCochainGuard = std::size_t(1) << 26;

}  // namespace

Cochain::Cochain(GroupPtr G, int arity) : G_(std::move(G)), arity_(arity), n_(G_->order()) {
  if (arity < 0) throw std::invalid_argument("negative cochain arity");
  std::size_t sz = ipow(static_cast<std::size_t>(n_), arity);
  if (sz > kCochainGuard) throw std::length_error("cochain table too large");
  values_.assign(sz, Phase());
}

std::size_t Cochain::index(const int* args) const {
  std::size_t i = 0;
  for (int k = 0; k < arity_; ++k) i = i * static_cast<std::size_t>(n_) + static_cast<std::size_t>(args[k]);
  return i;
}

bool Cochain::is_normalized() const {
  std::vector<int> t(static_cast<std::size_t>(arity_), 0);
  if (arity_ == 0) return true;
  do {
    bool has_id = false;
    for (int x : t) has_id = has_id || x == 0;
    if (has_id && !at(t.data()).is_zero()) return false;
  } while (next_tuple(t, 0, n_));
  return true;
}

bool Cochain::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

std::int64_t Cochain::lcm_denominator() const {
  std::int64_t l = 1;
  for (const auto& v : values_) l = checked_lcm(l, v.den());
  return l;
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (!same_group(G_, o.G_) || arity_ != o.arity_) throw std::invalid_argument("cochain shape mismatch");
  Cochain r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] += o.values_[i];
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  if (!same_group(G_, o.G_) || arity_ != o.arity_) throw std::invalid_argument("cochain shape mismatch");
  Cochain r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] -= o.values_[i];
  return r;
}

namespace {

Phase differential_at(const Cochain& f, const std::vector<int>& g) {
  const FiniteGroup& G = *f.group();
  const int n = f.arity();
  std::vector<int> args(static_cast<std::size_t>(std::max(n, 1)));
  Phase acc;
  // (-1)^{n+1} f(g1..gn)
  for (int k = 0; k < n; ++k) args[static_cast<std::size_t>(k)] = g[static_cast<std::size_t>(k + 1)];
  Phase first = f.at(args.data());
  acc += ((n + 1) % 2 == 0) ? first : -first;
  for (int i = 0; i < n; ++i) {
    std::size_t w = 0;
    for (int k = 0; k <= n; ++k) {
      if (k == i + 1) continue;
      args[w++] = (k == i) ? G.mul(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i + 1)])
                           : g[static_cast<std::size_t>(k)];
    }
    Phase v = f.at(args.data());
    acc += ((n - i) % 2 == 0) ? v : -v;
  }
  for (int k = 0; k < n; ++k) args[static_cast<std::size_t>(k)] = g[static_cast<std::size_t>(k)];
  acc += f.at(args.data());
  return acc;
}

}  // namespace

Cochain bar_differential(const Cochain& f) {
  Cochain d(f.group(), f.arity() + 1);
  const int n = f.group()->order();
  std::vector<int> t(static_cast<std::size_t>(f.arity() + 1), 0);
  std::size_t i = 0;
  do {
    d.value(i++) = differential_at(f, t);
  } while (next_tuple(t, 0, n));
  return d;
}

std::optional<std::vector<int>> cocycle_violation(const Cochain& f) {
  const int n = f.group()->order();
  std::vector<int> t(static_cast<std::size_t>(f.arity() + 1), 0);
  do {
    if (!differential_at(f, t).is_zero()) return t;
  } while (next_tuple(t, 0, n));
  return std::nullopt;
}

bool is_cocycle(const Cochain& f) { return !cocycle_violation(f).has_value(); }

Cochain dihedral_omega_p(const GroupPtr& D, int m, int p) {
  if (m < 1) throw std::invalid_argument("dihedral parameter m must be positive");
  if (p < 0 || p > 4 * m + 1) throw std::out_of_range("p must lie in [0, 4m+1]");
  DihedralCodec codec(m);
  if (D->order() != 2 * codec.n()) throw std::invalid_argument("group is not D_{2m+1}");
  const int k = codec.n();
  Cochain w(D, 3);
  int args[3];
  for (args[0] = 0; args[0] < D->order(); ++args[0])
    for (args[1] = 0; args[1] < D->order(); ++args[1])
      for (args[2] = 0; args[2] < D->order(); ++args[2]) {
        DihedralElement a = codec.decode(args[0]), b = codec.decode(args[1]), c = codec.decode(args[2]);
        int t = (c.g0 ? -b.g1 : b.g1) + c.g1;
        int l = (t - codec.reduce(t)) / k;
        int sign = ((b.g0 + c.g0) % 2) ? -1 : 1;
        Phase v(static_cast<std::int64_t>(p) * sign * a.g1 * l, k);
        v += Phase(static_cast<std::int64_t>(p) * a.g0 * b.g0 * c.g0, 2);
        w.set(args, v);
      }
  return w;
}

Cochain dihedral_omega_p(int m, int p) { return dihedral_omega_p(make_dihedral_odd(m), m, p); }

Cochain restrict(const Cochain& f, const Subgroup& H) {
  if (!same_group(H.parent(), f.group())) throw std::invalid_argument("subgroup of a different group");
  Cochain r(H.as_group(), f.arity());
  const int k = H.order();
  std::vector<int> t(static_cast<std::size_t>(f.arity()), 0), g(t.size());
  std::size_t i = 0;
  if (f.arity() == 0) {
    r.value(0) = f.value(0);
    return r;
  }
  do {
    for (std::size_t j = 0; j < t.size(); ++j) g[j] = H.global(t[j]);
    r.value(i++) = f.at(g.data());
  } while (next_tuple(t, 0, k));
  return r;
}

Cochain adjust_by_coboundary(const Cochain& omega, const Cochain& mu) {
  if (mu.arity() + 1 != omega.arity()) throw std::invalid_argument("coboundary arity mismatch");
  return omega - bar_differential(mu);
}

std::size_t normalized_index(const GroupPtr& G, const int* args, int n) {
  std::size_t i = 0;
  const std::size_t b = static_cast<std::size_t>(G->order() - 1);
  for (int k = 0; k < n; ++k) {
    if (args[k] == 0) throw std::invalid_argument("identity argument in normalized index");
    i = i * b + static_cast<std::size_t>(args[k] - 1);
  }
  return i;
}

SparseSystem normalized_differential(const GroupPtr& G, int n) {
  const int ord = G->order();
  const std::size_t b = static_cast<std::size_t>(ord - 1);
  if (ipow(b, n + 1) > kCochainGuard) throw std::length_error("cochain complex too large");
  SparseSystem sys(ipow(b, n));
  if (ord == 1) return sys;
  std::vector<int> t(static_cast<std::size_t>(n + 1), 1), args(static_cast<std::size_t>(std::max(n, 1)));
  do {
    SparseSystem::Row row;
    auto term = [&](std::int64_t sign) {
      for (int k = 0; k < n; ++k)
        if (args[static_cast<std::size_t>(k)] == 0) return;
      row.emplace_back(normalized_index(G, args.data(), n), sign);
    };
    for (int k = 0; k < n; ++k) args[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k + 1)];
    term((n + 1) % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i) {
      std::size_t w = 0;
      for (int k = 0; k <= n; ++k) {
        if (k == i + 1) continue;
        args[w++] = (k == i) ? G->mul(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)])
                             : t[static_cast<std::size_t>(k)];
      }
      term((n - i) % 2 == 0 ? 1 : -1);
    }
    for (int k = 0; k < n; ++k) args[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k)];
    term(1);
    sys.add_row(std::move(row));
  } while (next_tuple(t, 1, ord));
  return sys;
}

Cochain cochain_from_normalized(const GroupPtr& G, int n, const std::vector<std::int64_t>& exps, std::int64_t M) {
  Cochain c(G, n);
  if (G->order() == 1) return c;
  std::vector<int> t(static_cast<std::size_t>(n), 1);
  do {
    c.set(t.data(), Phase(exps[normalized_index(G, t.data(), n)], M));
  } while (next_tuple(t, 1, G->order()));
  return c;
}

std::uint64_t CohomologyGroup::order() const {
  std::uint64_t r = 1;
  for (auto d : invariant_factors) r *= static_cast<std::uint64_t>(d);
  return r;
}

CohomologyGroup cohomology_group(const GroupPtr& G, int n, std::int64_t M) {
  if (n < 1 || n > 3) throw std::invalid_argument("cohomology degree must be 1, 2 or 3");
  if (M < 1) throw std::invalid_argument("modulus must be positive");
  CohomologyGroup out;
  if (G->order() == 1) return out;
  // H^n(G, Q/Z) = H^{n+1}(G, Z) = torsion of coker(d_n) on integral cochains;
  // its invariant factors divide |G|, so working mod M|G| loses nothing.
  SparseSystem d = normalized_differential(G, n);
  const std::int64_t K = M * G->order();
  for (auto t : invariant_factors_mod(d, K)) {
    if (t == K || t == 1) continue;
    std::int64_t g = std::gcd(t, M);
    if (g > 1) out.invariant_factors.push_back(g);
  }
  out.invariant_factors = orders_to_invariant_factors(out.invariant_factors);
  return out;
}

std::vector<Cochain> cocycle_generators(const GroupPtr& G, int n, std::int64_t M) {
  std::vector<Cochain> out;
  if (G->order() == 1) return out;
  SparseSystem d = normalized_differential(G, n);
  auto sol = solve_affine_mod(d, M);
  for (const auto& g : sol->generators()) out.push_back(cochain_from_normalized(G, n, g, M));
  return out;
}

TotalCochain2::TotalCochain2(GroupPtr H_, std::vector<int> N_) : H(std::move(H_)), N(std::move(N_)) {
  if (N.empty() || N[0] != 0) throw std::invalid_argument("normal subgroup must list the identity first");
  eps.assign(static_cast<std::size_t>(H->order()) * N.size(), Phase());
  kappa.assign(N.size() * N.size(), Phase());
}

bool TotalCochain2::is_normalized() const {
  const std::size_t k = N.size();
  for (int h = 0; h < H->order(); ++h)
    if (!epsilon(h, 0).is_zero()) return false;
  for (std::size_t j = 0; j < k; ++j)
    if (!epsilon(0, j).is_zero() || !this->k(0, j).is_zero() || !this->k(j, 0).is_zero()) return false;
  return true;
}

TotalCochain2 TotalCochain2::operator-(const TotalCochain2& o) const {
  TotalCochain2 r = *this;
  for (std::size_t i = 0; i < eps.size(); ++i) r.eps[i] -= o.eps[i];
  for (std::size_t i = 0; i < kappa.size(); ++i) r.kappa[i] -= o.kappa[i];
  return r;
}

TotalCochain2 TotalCochain2::operator+(const TotalCochain2& o) const {
  TotalCochain2 r = *this;
  for (std::size_t i = 0; i < eps.size(); ++i) r.eps[i] += o.eps[i];
  for (std::size_t i = 0; i < kappa.size(); ++i) r.kappa[i] += o.kappa[i];
  return r;
}

bool TotalD2::is_zero() const {
  for (const auto* v : {&tau_part, &gamma_part, &omega_part})
    for (const auto& x : *v)
      if (!x.is_zero()) return false;
  return true;
}

namespace {

std::vector<int> local_index(const GroupPtr& H, const std::vector<int>& N) {
  std::vector<int> loc(static_cast<std::size_t>(H->order()), -1);
  for (std::size_t j = 0; j < N.size(); ++j) loc[static_cast<std::size_t>(N[j])] = static_cast<int>(j);
  return loc;
}

}  // namespace

TotalD2 total_d2(const TotalCochain2& x) {
  const FiniteGroup& H = *x.H;
  const int h = H.order();
  const std::size_t k = x.N.size();
  auto loc = local_index(x.H, x.N);
  auto L = [&](int g) {
    int v = loc[static_cast<std::size_t>(g)];
    if (v < 0) throw std::invalid_argument("N is not normal in H");
    return static_cast<std::size_t>(v);
  };
  TotalD2 out;
  out.tau_part.resize(static_cast<std::size_t>(h * h) * k);
  out.gamma_part.resize(static_cast<std::size_t>(h) * k * k);
  out.omega_part.resize(k * k * k);
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b)
      for (std::size_t j = 0; j < k; ++j) {
        int n = x.N[j];
        out.tau_part[(static_cast<std::size_t>(a * h + b)) * k + j] =
            x.epsilon(a, L(H.conj(b, n))) + x.epsilon(b, j) - x.epsilon(H.mul(a, b), j);
      }
  for (int a = 0; a < h; ++a)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        int n = x.N[i], m = x.N[j];
        Phase v = x.k(L(H.conj(a, n)), L(H.conj(a, m))) - x.k(i, j);
        v += x.epsilon(a, L(H.mul(n, m))) - x.epsilon(a, i) - x.epsilon(a, j);
        out.gamma_part[(static_cast<std::size_t>(a) * k + i) * k + j] = v;
      }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        int n = x.N[i], m = x.N[j], p = x.N[l];
        out.omega_part[(i * k + j) * k + l] =
            x.k(i, j) + x.k(L(H.mul(n, m)), l) - x.k(i, L(H.mul(m, p))) - x.k(j, l);
      }
  return out;
}

TotalCochain2 total_d1(const GroupPtr& H, const std::vector<int>& N, const std::vector<Phase>& sigma) {
  if (sigma.size() != N.size()) throw std::invalid_argument("sigma must have one value per element of N");
  TotalCochain2 x(H, N);
  auto loc = local_index(H, N);
  const std::size_t k = N.size();
  for (int a = 0; a < H->order(); ++a)
    for (std::size_t j = 0; j < k; ++j)
      x.eps[static_cast<std::size_t>(a) * k + j] =
          sigma[static_cast<std::size_t>(loc[static_cast<std::size_t>(H->conj(a, N[j]))])] - sigma[j];
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      x.kappa[i * k + j] =
          sigma[i] + sigma[j] - sigma[static_cast<std::size_t>(loc[static_cast<std::size_t>(H->mul(N[i], N[j]))])];
  return x;
}

std::optional<std::vector<Phase>> h2tot_trivial_witness(const TotalCochain2& x, std::int64_t M) {
  const std::size_t k = x.N.size();
  const int h = x.H->order();
  std::int64_t Mx = M;
  for (const auto& v : x.eps) Mx = checked_lcm(Mx, v.den());
  for (const auto& v : x.kappa) Mx = checked_lcm(Mx, v.den());
  const std::int64_t big = Mx * static_cast<std::int64_t>(k);
  if (k == 1) {
    for (const auto& v : x.eps)
      if (!v.is_zero()) return std::nullopt;
    if (!x.kappa[0].is_zero()) return std::nullopt;
    return std::vector<Phase>{Phase()};
  }
  auto loc = local_index(x.H, x.N);
  // variables sigma(n) for n != 1, index j - 1
  SparseSystem sys(k - 1);
  auto var = [](std::size_t j) { return j - 1; };
  auto scaled = [&](Phase v) { return v.at_modulus(Mx) * static_cast<std::int64_t>(k); };
  for (int a = 0; a < h; ++a)
    for (std::size_t j = 0; j < k; ++j) {
      SparseSystem::Row r;
      std::size_t c = static_cast<std::size_t>(loc[static_cast<std::size_t>(x.H->conj(a, x.N[j]))]);
      if (c != 0) r.emplace_back(var(c), 1);
      if (j != 0) r.emplace_back(var(j), -1);
      sys.add_row(std::move(r), scaled(x.epsilon(a, j)));
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      SparseSystem::Row r;
      std::size_t c = static_cast<std::size_t>(loc[static_cast<std::size_t>(x.H->mul(x.N[i], x.N[j]))]);
      if (i != 0) r.emplace_back(var(i), 1);
      if (j != 0) r.emplace_back(var(j), 1);
      if (c != 0) r.emplace_back(var(c), -1);
      sys.add_row(std::move(r), scaled(x.k(i, j)));
    }
  auto sol = solve_affine_mod(sys, big);
  if (!sol) return std::nullopt;
  std::vector<Phase> sigma(k, Phase());
  for (std::size_t j = 1; j < k; ++j) sigma[j] = Phase(sol->particular()[var(j)], big);
  return sigma;
}

}  // namespace dwcat
