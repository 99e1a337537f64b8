#include "dwcat/local_modules.hpp"

#include <stdexcept>

namespace dwcat {

ModuleReport check_module(const AlgebraModule& M) {
  ModuleReport r;
  const auto& A = M.alg;
  auto idM = LinearMap::identity(M.obj.dim());
  auto idA = LinearMap::identity(A.dim());
  r.associative = M.rho * tensor(M.rho, idA) == M.rho * tensor(idM, A.mult) * associator(M.obj, A.obj, A.obj);
  r.unital = M.rho * tensor(idM, A.unit) == idM;
  r.morphism = is_morphism(M.rho, tensor(M.obj, A.obj), M.obj);
  return r;
}

bool is_local(const AlgebraModule& M) {
  return M.rho == M.rho * braiding(M.alg.obj, M.obj) * braiding(M.obj, M.alg.obj);
}

AlgebraModule free_module(const MonomialYDModule& X, const CenterAlgebra& A) {
  MonomialYDModule XA = tensor(X, A.obj);
  LinearMap rho = tensor(LinearMap::identity(X.dim()), A.mult) * associator(X, A.obj, A.obj);
  return {XA, A, rho};
}

AlgebraModule induced_module(const Induction& I, const MonomialYDModule& V) {
  MonomialYDModule one = unit_object(V.category());
  CenterAlgebra AH = I.induce_algebra(CenterAlgebra{one, LinearMap::identity(1), LinearMap::identity(1),
                                                    LinearMap::identity(1), LinearMap::identity(1)});
  return {I.induce(V), AH, I.lax_mu(V, one)};
}

Extraction decompose_and_extract(const Induction& I, const AlgebraModule& L) {
  if (!is_local(L)) throw std::invalid_argument("module is not local");
  const std::size_t r = I.index();
  if (L.alg.dim() != r) throw std::invalid_argument("module is not over A_H");
  const std::size_t dim = L.obj.dim();
  Extraction out;
  out.components.assign(r, {});
  for (std::size_t b = 0; b < dim; ++b) {
    int home = -1;
    for (std::size_t i = 0; i < r; ++i) {
      const auto& col = L.rho.column(b * r + i);
      if (col.empty()) continue;
      if (col.size() != 1 || col[0].first != b || col[0].second != CycloSum(1) || home >= 0)
        throw std::invalid_argument("basis is not adapted to the idempotents of A_H");
      home = static_cast<int>(i);
    }
    if (home < 0) throw std::invalid_argument("basis vector killed by every idempotent");
    out.components[static_cast<std::size_t>(home)].push_back(b);
  }
  const auto& L1 = out.components[0];
  for (const auto& c : out.components)
    if (c.size() != L1.size()) throw std::invalid_argument("components have different dimensions");
  const Subgroup& H = I.subgroup();
  std::vector<int> pos(dim, -1);
  for (std::size_t j = 0; j < L1.size(); ++j) pos[L1[j]] = static_cast<int>(j);
  std::vector<int> degree;
  std::vector<std::string> labels;
  for (std::size_t b : L1) {
    int d = L.obj.degree(b);
    if (!H.contains(d)) throw std::invalid_argument("degree of L^1 outside the subgroup");
    degree.push_back(H.local(d));
    labels.push_back(L.obj.label(b));
  }
  std::vector<MonomialAction> act;
  for (int h = 0; h < H.order(); ++h)
    for (std::size_t b : L1) {
      const auto& e = L.obj.act(H.global(h), b);
      int t = pos[static_cast<std::size_t>(e.target)];
      if (t < 0) throw std::invalid_argument("subgroup action leaves L^1");
      act.push_back({t, e.phase});
    }
  out.V = MonomialYDModule(I.source(), std::move(degree), std::move(act), std::move(labels));
  return out;
}

RelativeTensorReport check_relative_tensor(const Induction& I, const MonomialYDModule& U, const MonomialYDModule& V) {
  RelativeTensorReport rep;
  const Category& cat = *I.ambient();
  const FiniteGroup& G = cat.G();
  const Subgroup& H = I.subgroup();
  const MonomialYDModule UV = tensor(U, V);
  const std::size_t du = U.dim(), dv = V.dim();
  // Lambda-bar nu-bar on I(U (x) V): nu-bar lands on matched pairs, Lambda on those uses lambda(g,d,g,f)
  for (std::size_t i = 0; i < I.index(); ++i) {
    int gi = H.coset_reps()[i];
    for (std::size_t b = 0; b < du; ++b)
      for (std::size_t c = 0; c < dv; ++c) {
        int d = I.global_degree(U, b), f = I.global_degree(V, c);
        Phase lam = -(cat.tau(gi, 0, f) + cat.gamma(gi, d, f));
        if (!(lam + cat.gamma(gi, d, f)).is_zero())
          rep.failures.push_back("Lambda-bar nu-bar at coset " + std::to_string(i));
        ++rep.checked;
      }
  }
  // nu-bar Lambda on arbitrary (g (x) u_d) (x) (l (x) v_f) with gH = lH
  for (int g = 0; g < G.order(); ++g)
    for (int l = 0; l < G.order(); ++l) {
      int gl = G.mul(G.inv(g), l);
      if (!H.contains(gl)) continue;
      for (std::size_t b = 0; b < du; ++b)
        for (std::size_t c = 0; c < dv; ++c) {
          int d = I.global_degree(U, b), f = I.global_degree(V, c);
          // Lambda: lambda(g,d,l,f) g (x) (u_d (x) g^-1 l . v_f), then normal form in I(U (x) V)
          const auto& e = V.act(H.local(gl), c);
          Phase lam = -(cat.tau(g, gl, f) + cat.gamma(g, d, G.conj(gl, f)));
          auto [p, t] = I.normal_form(UV, g, b * dv + static_cast<std::size_t>(e.target));
          Phase via_lambda = lam + e.phase + p;
          std::size_t i = t / (du * dv), bc = t % (du * dv);
          // nu-bar of that is gamma(g_i)(..) on the matched pair; compare with the normal form of the input pair
          int gi = H.coset_reps()[i];
          Phase nu = cat.gamma(gi, I.global_degree(U, bc / dv), I.global_degree(V, bc % dv));
          auto [p1, t1] = I.normal_form(U, g, b);
          auto [p2, t2] = I.normal_form(V, l, c);
          bool same = t1 / du == i && t2 / dv == i && t1 % du == bc / dv && t2 % dv == bc % dv &&
                      (via_lambda + nu - p1 - p2).is_zero();
          if (!same)
            rep.failures.push_back("nu-bar Lambda at g=" + std::to_string(g) + " l=" + std::to_string(l) +
                                   " b=" + std::to_string(b) + " c=" + std::to_string(c));
          ++rep.checked;
        }
    }
  return rep;
}

FpdimReport fpdim_report(std::int64_t G, std::int64_t H, std::int64_t N, std::optional<std::int64_t> dim_A) {
  using Q = boost::rational<std::int64_t>;
  if (G <= 0 || H <= 0 || N <= 0 || G % H != 0 || H % N != 0)
    throw std::invalid_argument("need |N| dividing |H| dividing |G|");
  FpdimReport r;
  r.fpdim_center = Q(G * G);
  r.dim_A = dim_A ? Q(*dim_A) : Q(G * N, H);
  r.fpdim_rep = r.fpdim_center / r.dim_A;
  r.fpdim_rep_loc = r.fpdim_center / (r.dim_A * r.dim_A);
  r.rep_matches = r.fpdim_rep == Q(G * H, N);
  r.rep_loc_matches = r.fpdim_rep_loc == Q(H * H, N * N);
  r.consistent = r.fpdim_rep_loc == Q(G * G) / (r.dim_A * r.dim_A) && r.rep_loc_matches;
  return r;
}

ALocalReport check_A_local_over_A1(const CategoryPtr& cat, const Subgroup& H, const TotalCochain2& x,
                                   const CenterAlgebra& A) {
  ALocalReport rep;
  CenterAlgebra AH = build_AH(cat, H);
  const std::size_t r = AH.dim(), k = x.nsize();
  if (A.dim() != r * k) return rep;
  LinearMap iota(r, A.dim());
  for (std::size_t i = 0; i < r; ++i) iota.add(i, i * k, Phase());
  rep.subalgebra = is_morphism(iota, AH.obj, A.obj) && A.mult * tensor(iota, iota) == iota * AH.mult &&
                   iota * AH.unit == A.unit;
  AlgebraModule M{A.obj, AH, A.mult * tensor(LinearMap::identity(A.dim()), iota)};
  rep.module = check_module(M).ok();
  rep.local = rep.module && is_local(M);

  CenterAlgebra B = build_B(restrict_category(cat, H), x, false);
  LinearMap j(k, A.dim());
  for (std::size_t n = 0; n < k; ++n) j.add(n, n, Phase());
  bool ok = A.mult * tensor(j, j) == j * B.mult;
  for (int h = 0; h < H.order() && ok; ++h)
    for (std::size_t n = 0; n < k && ok; ++n) {
      const auto& ea = A.obj.act(H.global(h), n);
      const auto& eb = B.obj.act(h, n);
      ok = ea.target == eb.target && ea.phase == eb.phase;
    }
  rep.b_subalgebra = ok;
  return rep;
}

}  // namespace dwcat
