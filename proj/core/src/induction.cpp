#include "dwcat/induction.hpp"

#include <stdexcept>

namespace dwcat {

Induction::Induction(CategoryPtr ambient, Subgroup H)
    : cat_(std::move(ambient)), H_(std::move(H)), catH_(restrict_category(cat_, H_)) {}

std::pair<Phase, std::size_t> Induction::normal_form(const MonomialYDModule& V, int g, std::size_t b) const {
  // g (x) v_d = g_j h (x) v_d = tau(g_j, h)(d)^-1 g_j (x) h.v_d
  auto [j, h] = H_.decompose(g);
  const auto& e = V.act(H_.local(h), b);
  Phase p = e.phase - cat_->tau(H_.coset_reps()[static_cast<std::size_t>(j)], h, global_degree(V, b));
  return {p, static_cast<std::size_t>(j) * V.dim() + static_cast<std::size_t>(e.target)};
}

MonomialYDModule Induction::induce(const MonomialYDModule& V) const {
  if (V.category()->G().order() != H_.order()) throw std::invalid_argument("module does not live over the subgroup");
  const FiniteGroup& G = cat_->G();
  const auto& reps = H_.coset_reps();
  const std::size_t r = reps.size(), dv = V.dim();
  std::vector<int> degree(r * dv);
  std::vector<std::string> labels(r * dv);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t b = 0; b < dv; ++b) {
      degree[i * dv + b] = G.conj(reps[i], global_degree(V, b));
      labels[i * dv + b] = G.label(reps[i]) + "(x)" + V.label(b);
    }
  std::vector<MonomialAction> act;
  act.reserve(static_cast<std::size_t>(G.order()) * r * dv);
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t b = 0; b < dv; ++b) {
        auto [p, t] = normal_form(V, G.mul(g, reps[i]), b);
        act.push_back({static_cast<int>(t), p + cat_->tau(g, reps[i], global_degree(V, b))});
      }
  return MonomialYDModule(cat_, std::move(degree), std::move(act), std::move(labels));
}

LinearMap Induction::induce_map(const LinearMap& f) const {
  const std::size_t r = index(), s = f.src_dim(), t = f.tgt_dim();
  LinearMap out(r * s, r * t);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t b = 0; b < s; ++b)
      for (const auto& [c, v] : f.column(b)) out.add(i * s + b, i * t + c, v);
  return out;
}

LinearMap Induction::lax_mu(const MonomialYDModule& V, const MonomialYDModule& W) const {
  const std::size_t r = index(), dv = V.dim(), dw = W.dim();
  const auto& reps = H_.coset_reps();
  LinearMap mu(r * dv * r * dw, r * dv * dw);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t b = 0; b < dv; ++b)
      for (std::size_t c = 0; c < dw; ++c) {
        Phase p = -cat_->gamma(reps[i], global_degree(V, b), global_degree(W, c));
        mu.add((i * dv + b) * r * dw + i * dw + c, i * dv * dw + b * dw + c, p);
      }
  return mu;
}

LinearMap Induction::oplax_nu(const MonomialYDModule& V, const MonomialYDModule& W) const {
  const std::size_t r = index(), dv = V.dim(), dw = W.dim();
  const auto& reps = H_.coset_reps();
  LinearMap nu(r * dv * dw, r * dv * r * dw);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t b = 0; b < dv; ++b)
      for (std::size_t c = 0; c < dw; ++c) {
        Phase p = cat_->gamma(reps[i], global_degree(V, b), global_degree(W, c));
        nu.add(i * dv * dw + b * dw + c, (i * dv + b) * r * dw + i * dw + c, p);
      }
  return nu;
}

LinearMap Induction::lax_unit() const {
  LinearMap u(1, index());
  for (std::size_t i = 0; i < index(); ++i) u.add(0, i, Phase());
  return u;
}

LinearMap Induction::oplax_counit() const {
  LinearMap e(index(), 1);
  for (std::size_t i = 0; i < index(); ++i) e.add(i, 0, Phase());
  return e;
}

CenterAlgebra Induction::induce_algebra(const CenterAlgebra& B) const {
  const auto& V = B.obj;
  CenterAlgebra A{induce(V), induce_map(B.mult) * lax_mu(V, V), induce_map(B.unit) * lax_unit(), LinearMap(),
                  LinearMap()};
  if (B.has_coalgebra()) {
    A.comult = oplax_nu(V, V) * induce_map(B.comult);
    A.counit = oplax_counit() * induce_map(B.counit);
  }
  return A;
}

FrobeniusMonoidalReport verify_frobenius_monoidal(const Induction& I, const MonomialYDModule& V,
                                                  const MonomialYDModule& W, const MonomialYDModule& U) {
  FrobeniusMonoidalReport r;
  auto check = [&](bool& flag, bool ok, const char* name) {
    if (!ok && flag) r.failures.emplace_back(name);
    flag = flag && ok;
  };
  auto id = [](const MonomialYDModule& X) { return LinearMap::identity(X.dim()); };
  const MonomialYDModule one = unit_object(V.category());
  const MonomialYDModule IV = I.induce(V), IW = I.induce(W), IU = I.induce(U);
  const MonomialYDModule VW = tensor(V, W), WU = tensor(W, U);
  const MonomialYDModule IVW = I.induce(VW);

  LinearMap mu_vw = I.lax_mu(V, W), nu_vw = I.oplax_nu(V, W);
  check(r.separable, mu_vw * nu_vw == id(IVW), "separable");
  check(r.mu_morphism, is_morphism(mu_vw, tensor(IV, IW), IVW), "mu-morphism");
  check(r.nu_morphism, is_morphism(nu_vw, IVW, tensor(IV, IW)), "nu-morphism");

  // F(alpha) mu (mu (x) id) = mu (id (x) mu) alpha
  {
    LinearMap lhs = I.induce_map(associator(V, W, U)) * I.lax_mu(VW, U) * tensor(mu_vw, id(IU));
    LinearMap rhs = I.lax_mu(V, WU) * tensor(id(IV), I.lax_mu(W, U)) * associator(IV, IW, IU);
    check(r.lax_associative, lhs == rhs, "lax-associative");
  }
  {
    LinearMap left = I.lax_mu(one, V) * tensor(I.lax_unit(), id(IV));
    LinearMap right = I.lax_mu(V, one) * tensor(id(IV), I.lax_unit());
    check(r.lax_unital, left == id(IV) && right == id(IV), "lax-unital");
  }
  {
    LinearMap lhs = associator(IV, IW, IU) * tensor(nu_vw, id(IU)) * I.oplax_nu(VW, U);
    LinearMap rhs = tensor(id(IV), I.oplax_nu(W, U)) * I.oplax_nu(V, WU) * I.induce_map(associator(V, W, U));
    check(r.oplax_coassociative, lhs == rhs, "oplax-coassociative");
  }
  {
    LinearMap left = tensor(I.oplax_counit(), id(IV)) * I.oplax_nu(one, V);
    LinearMap right = tensor(id(IV), I.oplax_counit()) * I.oplax_nu(V, one);
    check(r.oplax_counital, left == id(IV) && right == id(IV), "oplax-counital");
  }
  // (mu (x) id) alpha^-1 (id (x) nu) = nu F(alpha^-1) mu   on I(V) (x) I(W (x) U)
  {
    LinearMap lhs = tensor(mu_vw, id(IU)) * associator_inverse(IV, IW, IU) * tensor(id(IV), I.oplax_nu(W, U));
    LinearMap rhs = I.oplax_nu(VW, U) * I.induce_map(associator_inverse(V, W, U)) * I.lax_mu(V, WU);
    check(r.frobmon1, lhs == rhs, "frobmon1");
  }
  // (id (x) mu) alpha (nu (x) id) = nu F(alpha) mu   on I(V (x) W) (x) I(U)
  {
    LinearMap lhs = tensor(id(IV), I.lax_mu(W, U)) * associator(IV, IW, IU) * tensor(nu_vw, id(IU));
    LinearMap rhs = I.oplax_nu(V, WU) * I.induce_map(associator(V, W, U)) * I.lax_mu(VW, U);
    check(r.frobmon2, lhs == rhs, "frobmon2");
  }
  check(r.braided_lax, I.lax_mu(W, V) * braiding(IV, IW) == I.induce_map(braiding(V, W)) * mu_vw, "braided-lax");
  check(r.braided_oplax, I.oplax_nu(W, V) * I.induce_map(braiding(V, W)) == braiding(IV, IW) * nu_vw,
        "braided-oplax");
  check(r.ribbon, I.induce_map(ribbon(V)) == ribbon(IV), "ribbon");
  return r;
}

MonomialYDModule random_module(const CategoryPtr& cat, std::mt19937_64& rng, int max_summands) {
  const FiniteGroup& G = cat->G();
  const int n = G.order();
  std::uniform_int_distribution<int> pick_elem(0, n - 1);
  std::uniform_int_distribution<int> pick_count(1, std::max(1, max_summands));
  const int summands = pick_count(rng);
  std::optional<MonomialYDModule> out;
  for (int s = 0; s < summands; ++s) {
    int d = pick_elem(rng);
    std::vector<int> cent;
    for (int g = 0; g < n; ++g)
      if (G.mul(g, d) == G.mul(d, g)) cent.push_back(g);
    Induction ind(cat, Subgroup(cat->group(), cent));
    const Category& catC = *ind.source();
    int dl = ind.subgroup().local(d);
    auto sol = projective_characters(catC, dl);
    if (!sol) throw std::logic_error("no projective character for a central degree");
    std::vector<std::int64_t> coeffs;
    for (auto o : sol->orders()) coeffs.push_back(std::uniform_int_distribution<std::int64_t>(0, o - 1)(rng));
    auto chi = character_from_exponents(catC, *sol, sol->element(coeffs));
    MonomialYDModule V = ind.induce(graded_line(ind.source(), dl, chi));
    std::vector<Phase> gauge;
    std::uniform_int_distribution<std::int64_t> pick_num(0, 2 * n - 1);
    for (std::size_t b = 0; b < V.dim(); ++b) gauge.emplace_back(pick_num(rng), 2 * n);
    V = regauge(V, gauge);
    out = out ? direct_sum(*out, V) : V;
  }
  return *out;
}

}  // namespace dwcat
