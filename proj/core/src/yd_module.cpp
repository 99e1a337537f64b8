#include "dwcat/yd_module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dwcat {

MonomialYDModule::MonomialYDModule(CategoryPtr cat, std::vector<int> degree, std::vector<MonomialAction> action,
                                   std::vector<std::string> labels)
    : cat_(std::move(cat)), degree_(std::move(degree)), action_(std::move(action)), labels_(std::move(labels)) {
  const int n = cat_->G().order();
  if (action_.size() != static_cast<std::size_t>(n) * degree_.size())
    throw std::invalid_argument("action table must have one entry per (group element, basis vector)");
  for (int d : degree_)
    if (d < 0 || d >= n) throw std::invalid_argument("degree out of range");
  for (const auto& a : action_)
    if (a.target < 0 || static_cast<std::size_t>(a.target) >= degree_.size())
      throw std::invalid_argument("action target out of range");
  if (labels_.empty())
    for (std::size_t b = 0; b < degree_.size(); ++b) labels_.push_back("v" + std::to_string(b));
  if (labels_.size() != degree_.size()) throw std::invalid_argument("label count does not match dimension");
}

std::vector<YdViolation> check_yd(const MonomialYDModule& V, std::size_t max_report) {
  std::vector<YdViolation> out;
  const Category& cat = *V.category();
  const FiniteGroup& G = cat.G();
  const int n = G.order();
  const std::size_t dim = V.dim();
  auto report = [&](std::string kind, std::vector<int> where) {
    if (out.size() < max_report) out.push_back({std::move(kind), std::move(where)});
  };
  for (std::size_t b = 0; b < dim; ++b) {
    const auto& e = V.act(0, b);
    if (e.target != static_cast<int>(b) || !e.phase.is_zero()) report("identity", {static_cast<int>(b)});
  }
  for (int g = 0; g < n; ++g) {
    std::vector<char> hit(dim, 0);
    for (std::size_t b = 0; b < dim; ++b) {
      const auto& e = V.act(g, b);
      if (hit[static_cast<std::size_t>(e.target)]) report("bijective", {g, static_cast<int>(b)});
      hit[static_cast<std::size_t>(e.target)] = 1;
      if (V.degree(static_cast<std::size_t>(e.target)) != G.conj(g, V.degree(b)))
        report("grading", {g, static_cast<int>(b)});
    }
  }
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      int hk = G.mul(h, k);
      for (std::size_t b = 0; b < dim; ++b) {
        const auto& e1 = V.act(k, b);
        const auto& e2 = V.act(h, static_cast<std::size_t>(e1.target));
        const auto& e3 = V.act(hk, b);
        if (e2.target != e3.target || !(e1.phase + e2.phase - e3.phase - cat.tau(h, k, V.degree(b))).is_zero())
          report("twisted-action", {h, k, static_cast<int>(b)});
      }
    }
  return out;
}

MonomialYDModule unit_object(const CategoryPtr& cat) {
  std::vector<MonomialAction> act(static_cast<std::size_t>(cat->G().order()), {0, Phase()});
  return MonomialYDModule(cat, {0}, std::move(act), {"1"});
}

MonomialYDModule graded_line(const CategoryPtr& cat, int d, const std::vector<Phase>& chi) {
  if (static_cast<int>(chi.size()) != cat->G().order()) throw std::invalid_argument("character has wrong length");
  std::vector<MonomialAction> act;
  for (const auto& c : chi) act.push_back({0, c});
  return MonomialYDModule(cat, {d}, std::move(act), {"k_" + cat->G().label(d)});
}

std::optional<AffineSolutionSet> projective_characters(const Category& cat, int d) {
  const FiniteGroup& G = cat.G();
  const int n = G.order();
  std::int64_t L = 1;
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) L = checked_lcm(L, cat.tau(h, k, d).den());
  std::int64_t M = std::max<std::int64_t>(2, static_cast<std::int64_t>(n) * L);
  SparseSystem sys(static_cast<std::size_t>(std::max(n - 1, 1)));
  for (int h = 1; h < n; ++h)
    for (int k = 1; k < n; ++k) {
      SparseSystem::Row r{{static_cast<std::size_t>(h - 1), 1}, {static_cast<std::size_t>(k - 1), 1}};
      int hk = G.mul(h, k);
      if (hk != 0) r.emplace_back(static_cast<std::size_t>(hk - 1), -1);
      sys.add_row(std::move(r), cat.tau(h, k, d).at_modulus(M));
    }
  if (n == 1) sys.add_row({{0, 1}}, 0);
  return solve_affine_mod(sys, M);
}

std::vector<Phase> character_from_exponents(const Category& cat, const AffineSolutionSet& sol,
                                            const std::vector<std::int64_t>& x) {
  std::vector<Phase> chi(static_cast<std::size_t>(cat.G().order()));
  for (std::size_t i = 0; i + 1 < chi.size(); ++i) chi[i + 1] = Phase(x[i], sol.modulus());
  return chi;
}

std::vector<MonomialYDModule> simple_lines(const CategoryPtr& cat) {
  std::vector<MonomialYDModule> out;
  for (int d : cat->G().center()) {
    auto sol = projective_characters(*cat, d);
    if (!sol) continue;
    sol->for_each([&](const std::vector<std::int64_t>& x) { out.push_back(graded_line(cat, d, character_from_exponents(*cat, *sol, x))); });
  }
  return out;
}

MonomialYDModule direct_sum(const MonomialYDModule& V, const MonomialYDModule& W) {
  if (V.category() != W.category()) throw std::invalid_argument("direct sum across categories");
  const int n = V.category()->G().order();
  const std::size_t dv = V.dim(), dw = W.dim();
  std::vector<int> deg = V.degrees();
  deg.insert(deg.end(), W.degrees().begin(), W.degrees().end());
  std::vector<MonomialAction> act;
  for (int g = 0; g < n; ++g) {
    for (std::size_t b = 0; b < dv; ++b) act.push_back(V.act(g, b));
    for (std::size_t c = 0; c < dw; ++c) {
      auto e = W.act(g, c);
      e.target += static_cast<int>(dv);
      act.push_back(e);
    }
  }
  std::vector<std::string> labels = V.labels();
  for (const auto& l : W.labels()) labels.push_back(l + "'");
  return MonomialYDModule(V.category(), std::move(deg), std::move(act), std::move(labels));
}

MonomialYDModule regauge(const MonomialYDModule& V, const std::vector<Phase>& sigma) {
  if (sigma.size() != V.dim()) throw std::invalid_argument("gauge has wrong length");
  const int n = V.category()->G().order();
  std::vector<MonomialAction> act;
  for (int g = 0; g < n; ++g)
    for (std::size_t b = 0; b < V.dim(); ++b) {
      auto e = V.act(g, b);
      e.phase = e.phase + sigma[b] - sigma[static_cast<std::size_t>(e.target)];
      act.push_back(e);
    }
  return MonomialYDModule(V.category(), V.degrees(), std::move(act), V.labels());
}

MonomialYDModule tensor(const MonomialYDModule& V, const MonomialYDModule& W) {
  if (V.category() != W.category()) throw std::invalid_argument("tensor product across categories");
  const Category& cat = *V.category();
  const FiniteGroup& G = cat.G();
  const int n = G.order();
  const std::size_t dv = V.dim(), dw = W.dim();
  std::vector<int> deg(dv * dw);
  std::vector<std::string> labels(dv * dw);
  for (std::size_t b = 0; b < dv; ++b)
    for (std::size_t c = 0; c < dw; ++c) {
      deg[b * dw + c] = G.mul(V.degree(b), W.degree(c));
      labels[b * dw + c] = V.label(b) + "*" + W.label(c);
    }
  std::vector<MonomialAction> act(static_cast<std::size_t>(n) * dv * dw);
  for (int g = 0; g < n; ++g)
    for (std::size_t b = 0; b < dv; ++b)
      for (std::size_t c = 0; c < dw; ++c) {
        const auto& x = V.act(g, b);
        const auto& y = W.act(g, c);
        act[static_cast<std::size_t>(g) * dv * dw + b * dw + c] = {
            x.target * static_cast<int>(dw) + y.target,
            x.phase + y.phase + cat.gamma(g, V.degree(b), W.degree(c))};
      }
  return MonomialYDModule(V.category(), std::move(deg), std::move(act), std::move(labels));
}

LinearMap braiding(const MonomialYDModule& V, const MonomialYDModule& W) {
  const std::size_t dv = V.dim(), dw = W.dim();
  LinearMap c(dv * dw, dw * dv);
  for (std::size_t b = 0; b < dv; ++b)
    for (std::size_t x = 0; x < dw; ++x) {
      const auto& e = W.act(V.degree(b), x);
      c.add(b * dw + x, static_cast<std::size_t>(e.target) * dv + b, e.phase);
    }
  return c;
}

LinearMap braiding_inverse(const MonomialYDModule& V, const MonomialYDModule& W) {
  const Category& cat = *V.category();
  const FiniteGroup& G = cat.G();
  const std::size_t dv = V.dim(), dw = W.dim();
  LinearMap c(dw * dv, dv * dw);
  for (std::size_t x = 0; x < dw; ++x)
    for (std::size_t b = 0; b < dv; ++b) {
      int a = V.degree(b);
      const auto& e = W.act(G.inv(a), x);
      c.add(x * dv + b, b * dw + static_cast<std::size_t>(e.target), e.phase - cat.tau(a, G.inv(a), W.degree(x)));
    }
  return c;
}

LinearMap ribbon(const MonomialYDModule& V) {
  LinearMap t(V.dim(), V.dim());
  for (std::size_t b = 0; b < V.dim(); ++b) {
    const auto& e = V.act(V.degree(b), b);
    t.add(b, static_cast<std::size_t>(e.target), e.phase);
  }
  return t;
}

namespace {

LinearMap associator_signed(const MonomialYDModule& U, const MonomialYDModule& V, const MonomialYDModule& W,
                            bool inverse) {
  const Category& cat = *U.category();
  const std::size_t du = U.dim(), dv = V.dim(), dw = W.dim();
  LinearMap a(du * dv * dw, du * dv * dw);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t j = 0; j < dv; ++j)
      for (std::size_t k = 0; k < dw; ++k) {
        std::size_t idx = (i * dv + j) * dw + k;
        Phase p = cat.w(U.degree(i), V.degree(j), W.degree(k));
        a.add(idx, idx, inverse ? p : -p);
      }
  return a;
}

}  // namespace

LinearMap associator(const MonomialYDModule& U, const MonomialYDModule& V, const MonomialYDModule& W) {
  return associator_signed(U, V, W, false);
}

LinearMap associator_inverse(const MonomialYDModule& U, const MonomialYDModule& V, const MonomialYDModule& W) {
  return associator_signed(U, V, W, true);
}

LinearMap action_map(const MonomialYDModule& V, int g) {
  LinearMap m(V.dim(), V.dim());
  for (std::size_t b = 0; b < V.dim(); ++b) {
    const auto& e = V.act(g, b);
    m.add(b, static_cast<std::size_t>(e.target), e.phase);
  }
  return m;
}

std::optional<std::string> morphism_defect(const LinearMap& f, const MonomialYDModule& V, const MonomialYDModule& W) {
  if (f.src_dim() != V.dim() || f.tgt_dim() != W.dim()) return "dimension mismatch";
  for (std::size_t b = 0; b < V.dim(); ++b)
    for (const auto& [t, c] : f.column(b))
      if (W.degree(t) != V.degree(b) && !c.is_zero())
        return "grading broken at source " + std::to_string(b) + " -> " + std::to_string(t);
  const int n = V.category()->G().order();
  for (int g = 0; g < n; ++g) {
    LinearMap lhs = compose(f, action_map(V, g));
    LinearMap rhs = compose(action_map(W, g), f);
    std::size_t j = lhs.first_difference(rhs);
    if (j != lhs.src_dim())
      return "not equivariant for g=" + std::to_string(g) + " at source " + std::to_string(j);
  }
  return std::nullopt;
}

HexagonReport check_hexagons(const MonomialYDModule& X, const MonomialYDModule& Y, const MonomialYDModule& Z) {
  HexagonReport r;
  auto idY = LinearMap::identity(Y.dim());
  auto idZ = LinearMap::identity(Z.dim());
  auto idX = LinearMap::identity(X.dim());
  MonomialYDModule YZ = tensor(Y, Z);
  MonomialYDModule XY = tensor(X, Y);
  LinearMap lhs1 = associator(Y, Z, X) * braiding(X, YZ) * associator(X, Y, Z);
  LinearMap rhs1 = tensor(idY, braiding(X, Z)) * associator(Y, X, Z) * tensor(braiding(X, Y), idZ);
  r.hexagon1 = lhs1 == rhs1;
  LinearMap lhs2 = associator_inverse(Z, X, Y) * braiding(XY, Z) * associator_inverse(X, Y, Z);
  LinearMap rhs2 = tensor(braiding(X, Z), idY) * associator_inverse(X, Z, Y) * tensor(idX, braiding(Y, Z));
  r.hexagon2 = lhs2 == rhs2;
  return r;
}

bool check_balancing(const MonomialYDModule& V, const MonomialYDModule& W) {
  LinearMap lhs = ribbon(tensor(V, W));
  LinearMap rhs = tensor(ribbon(V), ribbon(W)) * braiding(W, V) * braiding(V, W);
  return lhs == rhs;
}

std::optional<StructuralIso> structurally_isomorphic(const MonomialYDModule& V, const MonomialYDModule& W) {
  const std::size_t dim = V.dim();
  if (dim != W.dim() || V.category()->G().order() != W.category()->G().order()) return std::nullopt;
  {
    auto a = V.degrees(), b = W.degrees();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const int n = V.category()->G().order();
  // orbit bases of V in index order
  std::vector<std::size_t> bases;
  std::vector<char> seen(dim, 0);
  for (std::size_t b = 0; b < dim; ++b) {
    if (seen[b]) continue;
    bases.push_back(b);
    for (int g = 0; g < n; ++g) seen[static_cast<std::size_t>(V.act(g, b).target)] = 1;
  }
  StructuralIso iso{std::vector<std::size_t>(dim, dim), std::vector<Phase>(dim)};
  std::vector<char> used(dim, 0);

  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == bases.size()) return true;
    std::size_t b0 = bases[k];
    for (std::size_t w0 = 0; w0 < dim; ++w0) {
      if (used[w0] || W.degree(w0) != V.degree(b0)) continue;
      std::vector<std::size_t> assigned;
      bool ok = true;
      iso.perm[b0] = w0;
      iso.gauge[b0] = Phase();
      used[w0] = 1;
      assigned.push_back(b0);
      for (std::size_t q = 0; q < assigned.size() && ok; ++q) {
        std::size_t b = assigned[q];
        std::size_t w = iso.perm[b];
        for (int g = 0; g < n && ok; ++g) {
          const auto& ev = V.act(g, b);
          const auto& ew = W.act(g, w);
          auto b1 = static_cast<std::size_t>(ev.target);
          auto w1 = static_cast<std::size_t>(ew.target);
          Phase s = iso.gauge[b] + ew.phase - ev.phase;
          if (iso.perm[b1] == dim) {
            if (used[w1] || W.degree(w1) != V.degree(b1)) {
              ok = false;
              break;
            }
            iso.perm[b1] = w1;
            iso.gauge[b1] = s;
            used[w1] = 1;
            assigned.push_back(b1);
          } else if (iso.perm[b1] != w1 || iso.gauge[b1] != s) {
            ok = false;
          }
        }
      }
      if (ok && place(k + 1)) return true;
      for (std::size_t b : assigned) {
        used[iso.perm[b]] = 0;
        iso.perm[b] = dim;
      }
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return iso;
}

}  // namespace dwcat
