#include "dwcat/algebra.hpp"

#include <stdexcept>

namespace dwcat {

namespace {

std::vector<int> index_in(int group_order, const std::vector<int>& elems) {
  std::vector<int> loc(static_cast<std::size_t>(group_order), -1);
  for (std::size_t j = 0; j < elems.size(); ++j) loc[static_cast<std::size_t>(elems[j])] = static_cast<int>(j);
  return loc;
}

LinearMap id_of(const CenterAlgebra& A) { return LinearMap::identity(A.dim()); }

}  // namespace

bool check_associative(const CenterAlgebra& A) {
  const auto& V = A.obj;
  LinearMap lhs = A.mult * tensor(A.mult, id_of(A));
  LinearMap rhs = A.mult * tensor(id_of(A), A.mult) * associator(V, V, V);
  return lhs == rhs;
}

bool check_unital(const CenterAlgebra& A) {
  LinearMap left = A.mult * tensor(A.unit, id_of(A));
  LinearMap right = A.mult * tensor(id_of(A), A.unit);
  return left == id_of(A) && right == id_of(A);
}

bool check_commutative(const CenterAlgebra& A) { return A.mult * braiding(A.obj, A.obj) == A.mult; }

bool check_coassociative(const CenterAlgebra& A) {
  const auto& V = A.obj;
  LinearMap lhs = associator(V, V, V) * tensor(A.comult, id_of(A)) * A.comult;
  LinearMap rhs = tensor(id_of(A), A.comult) * A.comult;
  return lhs == rhs;
}

bool check_counital(const CenterAlgebra& A) {
  LinearMap left = tensor(A.counit, id_of(A)) * A.comult;
  LinearMap right = tensor(id_of(A), A.counit) * A.comult;
  return left == id_of(A) && right == id_of(A);
}

bool check_frobenius(const CenterAlgebra& A) {
  const auto& V = A.obj;
  LinearMap mid = A.comult * A.mult;
  LinearMap left = tensor(A.mult, id_of(A)) * associator_inverse(V, V, V) * tensor(id_of(A), A.comult);
  if (left != mid) return false;
  LinearMap right = tensor(id_of(A), A.mult) * associator(V, V, V) * tensor(A.comult, id_of(A));
  return right == mid;
}

std::size_t check_connected(const CenterAlgebra& A) {
  const auto& V = A.obj;
  const int n = V.category()->G().order();
  const std::size_t dim = V.dim();
  std::vector<char> seen(dim, 0);
  std::vector<Phase> phi(dim);
  std::size_t count = 0;
  for (std::size_t b0 = 0; b0 < dim; ++b0) {
    if (seen[b0] || V.degree(b0) != 0) continue;
    bool trivial = true;
    std::vector<std::size_t> queue{b0};
    seen[b0] = 1;
    phi[b0] = Phase();
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t b = queue[q];
      for (int g = 0; g < n; ++g) {
        const auto& e = V.act(g, b);
        auto t = static_cast<std::size_t>(e.target);
        Phase want = phi[b] + e.phase;
        if (!seen[t]) {
          seen[t] = 1;
          phi[t] = want;
          queue.push_back(t);
        } else if (phi[t] != want) {
          trivial = false;
        }
      }
    }
    if (trivial) ++count;
  }
  return count;
}

std::optional<CycloSum> special_scalar(const CenterAlgebra& A) {
  if (A.dim() == 0) return std::nullopt;
  LinearMap md = A.mult * A.comult;
  CycloSum beta = md.coeff(0, 0);
  if (md != LinearMap::identity(A.dim()).scaled(beta)) return std::nullopt;
  return beta;
}

CycloSum counit_of_unit(const CenterAlgebra& A) { return (A.counit * A.unit).coeff(0, 0); }

CycloSum qdim(const CenterAlgebra& A) { return (A.counit * A.mult * A.comult * A.unit).coeff(0, 0); }

PropertyReport check_algebra(const CenterAlgebra& A) {
  PropertyReport r;
  const auto& V = A.obj;
  auto fail = [&](bool ok, const char* what) {
    if (!ok) r.failures.emplace_back(what);
    return ok;
  };
  r.module_valid = fail(check_yd(V, 1).empty(), "module");
  r.associative = fail(check_associative(A), "associative");
  r.unital = fail(check_unital(A), "unital");
  r.commutative = fail(check_commutative(A), "commutative");
  MonomialYDModule one = unit_object(V.category());
  MonomialYDModule VV = tensor(V, V);
  bool morph = is_morphism(A.mult, VV, V) && is_morphism(A.unit, one, V);
  if (A.has_coalgebra()) {
    morph = morph && is_morphism(A.comult, V, VV) && is_morphism(A.counit, V, one);
    r.coassociative = fail(check_coassociative(A), "coassociative");
    r.counital = fail(check_counital(A), "counital");
    r.frobenius = fail(check_frobenius(A), "frobenius");
    r.beta_A = special_scalar(A);
    r.beta_1 = counit_of_unit(A);
    r.qdim = qdim(A);
  } else {
    r.failures.emplace_back("no coalgebra");
  }
  r.morphisms = fail(morph, "morphisms");
  r.connected = A.dim() == 0 ? 0 : check_connected(A);
  r.twist_trivial = fail(ribbon(V) == LinearMap::identity(V.dim()), "twist");

  bool beta_a_nonzero = r.beta_A && !r.beta_A->is_zero();
  bool algebra_ok = r.module_valid && r.associative && r.unital && r.morphisms;
  bool frob_ok = algebra_ok && r.coassociative && r.counital && r.frobenius;
  r.separable = fail(frob_ok && beta_a_nonzero, "separable");
  r.special = fail(r.separable && !r.beta_1.is_zero(), "special");
  r.etale = r.commutative && r.separable;
  r.rigid = r.special && r.commutative && r.connected == 1;
  // a connected etale algebra with nonzero quantum dimension is rigid and has trivial twist
  bool alt = r.etale && r.connected == 1 && !r.qdim.is_zero();
  r.rigid_consistent = fail(r.rigid == alt && (!r.rigid || r.twist_trivial), "rigid-consistency");
  return r;
}

CenterAlgebra build_AH(const CategoryPtr& cat, const Subgroup& H) {
  if (!same_group(H.parent(), cat->group())) throw std::invalid_argument("subgroup of a different group");
  const FiniteGroup& G = cat->G();
  const auto& reps = H.coset_reps();
  const std::size_t k = reps.size();
  std::vector<MonomialAction> act;
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t i = 0; i < k; ++i) act.push_back({H.coset_of(G.mul(g, reps[i])), Phase()});
  std::vector<std::string> labels;
  for (int r : reps) labels.push_back("d_" + G.label(r) + "H");
  CenterAlgebra A{MonomialYDModule(cat, std::vector<int>(k, 0), std::move(act), std::move(labels)),
                  LinearMap(k * k, k), LinearMap(1, k), LinearMap(k, k * k), LinearMap(k, 1)};
  for (std::size_t i = 0; i < k; ++i) {
    A.mult.add(i * k + i, i, Phase());
    A.unit.add(0, i, Phase());
    A.comult.add(i, i * k + i, Phase());
    A.counit.add(i, 0, Phase());
  }
  return A;
}

std::vector<std::string> cocycle_data_violations(const Category& catH, const TotalCochain2& x) {
  if (catH.group()->order() != x.H->order()) throw std::invalid_argument("cocycle data lives on a different group");
  const FiniteGroup& H = catH.G();
  const int h = H.order();
  const std::size_t k = x.nsize();
  auto loc = index_in(h, x.N);
  for (int a = 0; a < h; ++a)
    for (int n : x.N)
      if (loc[static_cast<std::size_t>(H.conj(a, n))] < 0) throw std::invalid_argument("N is not normal in H");
  std::vector<std::string> out;
  if (!x.is_normalized()) out.emplace_back("normalization");
  TotalD2 d = total_d2(x);
  bool om = true, ta = true, ga = true, co = true;
  for (std::size_t i = 0; i < k && om; ++i)
    for (std::size_t j = 0; j < k && om; ++j)
      for (std::size_t l = 0; l < k && om; ++l)
        om = d.omega_part[(i * k + j) * k + l] == catH.w(x.N[i], x.N[j], x.N[l]);
  for (int a = 0; a < h && ta; ++a)
    for (int b = 0; b < h && ta; ++b)
      for (std::size_t j = 0; j < k && ta; ++j)
        ta = d.tau_part[static_cast<std::size_t>(a * h + b) * k + j] == catH.tau(a, b, x.N[j]);
  for (int a = 0; a < h && ga; ++a)
    for (std::size_t i = 0; i < k && ga; ++i)
      for (std::size_t j = 0; j < k && ga; ++j)
        ga = d.gamma_part[(static_cast<std::size_t>(a) * k + i) * k + j] == catH.gamma(a, x.N[i], x.N[j]);
  // kappa(n m n^-1, n) = epsilon_n(m) kappa(n, m)
  for (std::size_t i = 0; i < k && co; ++i)
    for (std::size_t j = 0; j < k && co; ++j) {
      int n = x.N[i], m = x.N[j];
      auto c = static_cast<std::size_t>(loc[static_cast<std::size_t>(H.conj(n, m))]);
      co = (x.k(c, i) - x.k(i, j) - x.epsilon(n, j)).is_zero();
    }
  if (!om) out.emplace_back("kappa-trivializes-omega");
  if (!ta) out.emplace_back("epsilon-twisted-action");
  if (!ga) out.emplace_back("epsilon-kappa-compat");
  if (!co) out.emplace_back("commutativity");
  return out;
}

namespace {

void require_valid(const Category& catH, const TotalCochain2& x) {
  auto v = cocycle_data_violations(catH, x);
  if (v.empty()) return;
  std::string msg = "cocycle data violates:";
  for (const auto& s : v) msg += " " + s;
  throw std::invalid_argument(msg);
}

}  // namespace

CenterAlgebra build_B(const CategoryPtr& catH, const TotalCochain2& x, bool validate) {
  if (validate) require_valid(*catH, x);
  const FiniteGroup& H = catH->G();
  const std::size_t k = x.nsize();
  auto loc = index_in(H.order(), x.N);
  auto L = [&](int g) { return static_cast<std::size_t>(loc[static_cast<std::size_t>(g)]); };
  std::vector<MonomialAction> act;
  for (int h = 0; h < H.order(); ++h)
    for (std::size_t j = 0; j < k; ++j)
      act.push_back({static_cast<int>(L(H.conj(h, x.N[j]))), x.epsilon(h, j)});
  std::vector<std::string> labels;
  for (int n : x.N) labels.push_back("e_" + H.label(n));
  CenterAlgebra B{MonomialYDModule(catH, x.N, std::move(act), std::move(labels)), LinearMap(k * k, k),
                  LinearMap(1, k), LinearMap(k, k * k), LinearMap(k, 1)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) B.mult.add(i * k + j, L(H.mul(x.N[i], x.N[j])), -x.k(i, j));
  B.unit.add(0, 0, Phase());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      // e_n -> kappa(m, m^-1 n) e_m (x) e_{m^-1 n}
      std::size_t r = L(H.mul(H.inv(x.N[i]), x.N[j]));
      B.comult.add(j, i * k + r, x.k(i, r));
    }
  B.counit.add(0, 0, Phase());
  return B;
}

CenterAlgebra build_A(const CategoryPtr& cat, const Subgroup& H, const TotalCochain2& x, bool validate) {
  if (!same_group(H.parent(), cat->group())) throw std::invalid_argument("subgroup of a different group");
  if (x.H->order() != H.order()) throw std::invalid_argument("cocycle data lives on a different group");
  if (validate) require_valid(*restrict_category(cat, H), x);
  const FiniteGroup& G = cat->G();
  const FiniteGroup& Hg = *x.H;
  const auto& reps = H.coset_reps();
  const std::size_t r = reps.size(), k = x.nsize();
  const std::size_t dim = r * k;
  auto loc = index_in(Hg.order(), x.N);
  auto L = [&](int hlocal) { return static_cast<std::size_t>(loc[static_cast<std::size_t>(hlocal)]); };
  std::vector<int> nglob(k);
  for (std::size_t j = 0; j < k; ++j) nglob[j] = H.global(x.N[j]);

  std::vector<int> degree(dim);
  std::vector<std::string> labels(dim);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      degree[i * k + j] = G.conj(reps[i], nglob[j]);
      labels[i * k + j] = "a_" + G.label(reps[i]) + "," + G.label(nglob[j]);
    }
  std::vector<MonomialAction> act;
  act.reserve(static_cast<std::size_t>(G.order()) * dim);
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        int n = nglob[j];
        auto [ci, h] = H.decompose(G.mul(g, reps[i]));
        int hl = H.local(h);
        std::size_t t = L(Hg.conj(hl, x.N[j]));
        Phase p = cat->tau(g, reps[i], n) - cat->tau(reps[static_cast<std::size_t>(ci)], h, n) + x.epsilon(hl, j);
        act.push_back({static_cast<int>(static_cast<std::size_t>(ci) * k + t), p});
      }
  CenterAlgebra A{MonomialYDModule(cat, std::move(degree), std::move(act), std::move(labels)),
                  LinearMap(dim * dim, dim), LinearMap(1, dim), LinearMap(dim, dim * dim), LinearMap(dim, 1)};
  for (std::size_t i = 0; i < r; ++i) {
    int gi = reps[i];
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        std::size_t c = L(Hg.mul(x.N[a], x.N[b]));
        A.mult.add((i * k + a) * dim + i * k + b, i * k + c, -cat->gamma(gi, nglob[a], nglob[b]) - x.k(a, b));
      }
    A.unit.add(0, i * k, Phase());
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t b = L(Hg.mul(Hg.inv(x.N[a]), x.N[j]));
        A.comult.add(i * k + j, (i * k + a) * dim + i * k + b, cat->gamma(gi, nglob[a], nglob[b]) + x.k(a, b));
      }
    }
    A.counit.add(i * k, 0, Phase());
  }
  return A;
}

std::optional<std::string> algebra_difference(const CenterAlgebra& A, const CenterAlgebra& B) {
  if (A.dim() != B.dim()) return "dimension";
  if (A.obj.degrees() != B.obj.degrees()) return "grading";
  if (!A.obj.same_tables(B.obj)) return "action";
  if (A.mult != B.mult) return "mult";
  if (A.unit != B.unit) return "unit";
  if (A.comult != B.comult) return "comult";
  if (A.counit != B.counit) return "counit";
  return std::nullopt;
}

}  // namespace dwcat
