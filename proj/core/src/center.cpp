#include "dwcat/center.hpp"

#include <stdexcept>

namespace dwcat {

TauGamma::TauGamma(const Cochain& w) : n_(static_cast<std::size_t>(w.group()->order())) {
  if (w.arity() != 3) throw std::invalid_argument("tau/gamma need a 3-cochain");
  const FiniteGroup& G = *w.group();
  const int n = G.order();
  tau_.resize(n_ * n_ * n_);
  gamma_.resize(n_ * n_ * n_);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      for (int d = 0; d < n; ++d) {
        int hk = G.mul(h, k);
        tau_[idx(h, k, d)] = w(h, k, d) + w(G.conj(hk, d), h, k) - w(h, G.conj(k, d), k);
      }
  for (int h = 0; h < n; ++h)
    for (int d = 0; d < n; ++d)
      for (int f = 0; f < n; ++f) {
        int hd = G.conj(h, d), hf = G.conj(h, f);
        gamma_[idx(h, d, f)] = w(h, d, f) + w(hd, hf, h) - w(hd, h, f);
      }
}

Category::Category(GroupPtr G, Cochain omega) : G_(std::move(G)), omega_(std::move(omega)), tg_(omega_) {
  if (!same_group(omega_.group(), G_)) throw std::invalid_argument("cocycle lives on a different group");
  if (omega_.arity() != 3) throw std::invalid_argument("associator must be a 3-cochain");
  if (!omega_.is_normalized()) throw std::invalid_argument("3-cocycle is not normalized");
  if (auto v = cocycle_violation(omega_)) {
    std::string t;
    for (int x : *v) t += (t.empty() ? "" : ",") + std::to_string(x);
    throw std::invalid_argument("not a 3-cocycle; violated at (" + t + ")");
  }
}

Category::Category(GroupPtr G, Cochain omega, TauGamma tg)
    : G_(std::move(G)), omega_(std::move(omega)), tg_(std::move(tg)) {}

CategoryPtr make_category(GroupPtr G, Cochain omega) {
  return std::make_shared<const Category>(std::move(G), std::move(omega));
}

CategoryPtr restrict_category(const CategoryPtr& cat, const Subgroup& H) {
  if (!same_group(H.parent(), cat->group())) throw std::invalid_argument("subgroup of a different group");
  return std::make_shared<const Category>(H.as_group(), restrict(cat->omega(), H));
}

std::vector<IdentityResult> verify_cocycle_identities(const Category& cat, std::size_t max_examples) {
  const FiniteGroup& G = cat.G();
  const int n = G.order();
  auto w = [&](int a, int b, int c) { return cat.w(a, b, c); };
  auto tau = [&](int h, int k, int d) { return cat.tau(h, k, d); };
  auto gam = [&](int h, int d, int f) { return cat.gamma(h, d, f); };
  auto mul = [&](int a, int b) { return G.mul(a, b); };
  auto inv = [&](int a) { return G.inv(a); };
  auto conj = [&](int g, int x) { return G.conj(g, x); };

  std::vector<IdentityResult> out(6);
  out[0].name = "tau-cocycle";
  out[1].name = "gamma-cocycle";
  out[2].name = "gamma-tau";
  out[3].name = "gamma-braid";
  out[4].name = "gamma-braid-inverse";
  out[5].name = "ribbon";
  auto record = [&](IdentityResult& r, Phase defect, std::vector<int> t) {
    ++r.checked;
    if (defect.is_zero()) return;
    ++r.violations;
    if (r.examples.size() < max_examples) r.examples.push_back(std::move(t));
  };

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        for (int d = 0; d < n; ++d) {
          // tau(h,k)(d) + tau(g,hk)(d) = tau(gh,k)(d) + tau(g,h)(kdk^-1)
          record(out[0], tau(h, k, d) + tau(g, mul(h, k), d) - tau(mul(g, h), k, d) - tau(g, h, conj(k, d)),
                 {g, h, k, d});
          // gamma(h)(x y, z) + gamma(h)(x, y) - omega(^h x, ^h y, ^h z)
          //   = gamma(h)(x, y z) + gamma(h)(y, z) - omega(x, y, z)
          int x = g, y = k, z = d;
          record(out[1],
                 gam(h, mul(x, y), z) + gam(h, x, y) - w(conj(h, x), conj(h, y), conj(h, z)) - gam(h, x, mul(y, z)) -
                     gam(h, y, z) + w(x, y, z),
                 {h, x, y, z});
          // gamma(k)(d,g) + gamma(h)(^k d, ^k g) + tau(h,k)(d) + tau(h,k)(g) = tau(h,k)(dg) + gamma(hk)(d,g)
          record(out[2],
                 gam(k, d, g) + gam(h, conj(k, d), conj(k, g)) + tau(h, k, d) + tau(h, k, g) - tau(h, k, mul(d, g)) -
                     gam(mul(h, k), d, g),
                 {h, k, d, g});
        }

  for (int k = 0; k < n; ++k)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        // gamma(k)(g,h) + tau(^k g, k)(h) = gamma(k)(^g h, g) + tau(k,g)(h)
        record(out[3], gam(k, g, h) + tau(conj(k, g), k, h) - gam(k, conj(g, h), g) - tau(k, g, h), {k, g, h});
        // gamma(k)(g,h) + tau(k h^-1 k^-1, k)(g) - tau(^k h, (^k h)^-1)(^k g)
        //   = gamma(k)(h, h^-1 g h) + tau(k, h^-1)(g) - tau(h, h^-1)(g)
        int hi = inv(h);
        int khk = conj(k, h);
        Phase lhs = gam(k, g, h) + tau(mul(mul(k, hi), inv(k)), k, g) - tau(khk, inv(khk), conj(k, g));
        Phase rhs = gam(k, h, conj(hi, g)) + tau(k, hi, g) - tau(h, hi, g);
        record(out[4], lhs - rhs, {k, g, h});
      }

  for (int d = 0; d < n; ++d)
    for (int f = 0; f < n; ++f) {
      // gamma(df)(d,f) = tau(^{dfd^-1} d, dfd^-1)(d) + tau(dfd^-1, d)(f)
      int df = mul(d, f);
      int e = conj(d, f);
      record(out[5], gam(df, d, f) - tau(conj(e, d), e, d) - tau(e, d, f), {d, f});
    }
  return out;
}

}  // namespace dwcat
