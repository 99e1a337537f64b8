#include "dwcat/classification.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dwcat/induction.hpp"
#include "dwcat/local_modules.hpp"

namespace dwcat {

namespace {

std::vector<int> local_positions(int order, const std::vector<int>& N) {
  std::vector<int> loc(static_cast<std::size_t>(order), -1);
  for (std::size_t j = 0; j < N.size(); ++j) loc[static_cast<std::size_t>(N[j])] = static_cast<int>(j);
  return loc;
}

struct RowBuilder {
  SparseSystem::Row row;
  void add(bool live, std::size_t var, std::int64_t c) {
    if (live) row.emplace_back(var, c);
  }
};

constexpr std::uint64_t kClassGuard = 1u << 20;

}  // namespace

std::int64_t default_pair_modulus(const Category& catH, std::size_t nsize) {
  std::int64_t M =
      static_cast<std::int64_t>(catH.G().order()) * static_cast<std::int64_t>(nsize) * catH.omega().lcm_denominator();
  return M < 2 ? 2 : M;
}

std::optional<AffineSolutionSet> solve_pairs(const Category& catH, const std::vector<int>& N, std::int64_t M) {
  const FiniteGroup& H = catH.G();
  const std::size_t k = N.size(), nh = static_cast<std::size_t>(H.order());
  if (k == 0 || N[0] != 0) throw std::invalid_argument("N must list the identity first");
  if (M < 2) throw std::invalid_argument("modulus must be at least 2");
  std::int64_t den = catH.omega().lcm_denominator();
  if (M % den != 0) throw std::invalid_argument("modulus must be a multiple of the cocycle denominators");
  auto loc = local_positions(H.order(), N);
  auto L = [&](int g) {
    int v = loc[static_cast<std::size_t>(g)];
    if (v < 0) throw std::invalid_argument("N is not a normal subgroup of H");
    return static_cast<std::size_t>(v);
  };
  for (int a = 0; a < H.order(); ++a)
    for (int n : N) L(H.conj(a, n));
  if (k == 1) {
    SparseSystem trivial(1);
    trivial.add_row({{0, 1}}, 0);
    return solve_affine_mod(trivial, M);
  }
  PairLayout lay{k, nh};
  SparseSystem sys(lay.num_vars());
  auto kap = [&](RowBuilder& r, std::size_t i, std::size_t j, std::int64_t c) { r.add(i && j, i && j ? lay.kappa_var(i, j) : 0, c); };
  auto eps = [&](RowBuilder& r, std::size_t h, std::size_t j, std::int64_t c) { r.add(h && j, h && j ? lay.eps_var(h, j) : 0, c); };

  // omega(n,m,l) = kappa(n,m) + kappa(nm,l) - kappa(n,ml) - kappa(m,l)
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t l = 1; l < k; ++l) {
        RowBuilder r;
        kap(r, i, j, 1);
        kap(r, L(H.mul(N[i], N[j])), l, 1);
        kap(r, i, L(H.mul(N[j], N[l])), -1);
        kap(r, j, l, -1);
        sys.add_row(std::move(r.row), catH.w(N[i], N[j], N[l]).at_modulus(M));
      }
  // tau(h,g)(n) = eps(h, g n g^-1) + eps(g, n) - eps(hg, n)
  for (std::size_t a = 0; a < nh; ++a)
    for (std::size_t b = 0; b < nh; ++b)
      for (std::size_t j = 1; j < k; ++j) {
        int ai = static_cast<int>(a), bi = static_cast<int>(b);
        RowBuilder r;
        eps(r, a, L(H.conj(bi, N[j])), 1);
        eps(r, b, j, 1);
        eps(r, static_cast<std::size_t>(H.mul(ai, bi)), j, -1);
        sys.add_row(std::move(r.row), catH.tau(ai, bi, N[j]).at_modulus(M));
      }
  // gamma(h)(n,m) = kappa(hn, hm) - kappa(n,m) + eps(h,nm) - eps(h,n) - eps(h,m)
  for (std::size_t a = 0; a < nh; ++a)
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t j = 1; j < k; ++j) {
        int ai = static_cast<int>(a);
        RowBuilder r;
        kap(r, L(H.conj(ai, N[i])), L(H.conj(ai, N[j])), 1);
        kap(r, i, j, -1);
        eps(r, a, L(H.mul(N[i], N[j])), 1);
        eps(r, a, i, -1);
        eps(r, a, j, -1);
        sys.add_row(std::move(r.row), catH.gamma(ai, N[i], N[j]).at_modulus(M));
      }
  // kappa(n m n^-1, n) - kappa(n, m) - eps(n, m) = 0
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 1; j < k; ++j) {
      RowBuilder r;
      kap(r, L(H.conj(N[i], N[j])), i, 1);
      kap(r, i, j, -1);
      eps(r, static_cast<std::size_t>(N[i]), j, -1);
      sys.add_row(std::move(r.row), 0);
    }
  return solve_affine_mod(sys, M);
}

TotalCochain2 cochain_from_exponents(const GroupPtr& H, const std::vector<int>& N, const std::vector<std::int64_t>& x,
                                     std::int64_t M) {
  TotalCochain2 c(H, N);
  const std::size_t k = N.size(), nh = static_cast<std::size_t>(H->order());
  if (k == 1) return c;
  PairLayout lay{k, nh};
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 1; j < k; ++j) c.kappa[i * k + j] = Phase(x[lay.kappa_var(i, j)], M);
  for (std::size_t h = 1; h < nh; ++h)
    for (std::size_t j = 1; j < k; ++j) c.eps[h * k + j] = Phase(x[lay.eps_var(h, j)], M);
  return c;
}

DedupResult dedupe_iso(const AffineSolutionSet& sol, const GroupPtr& Hg, const std::vector<int>& N) {
  const FiniteGroup& H = *Hg;
  const std::int64_t M = sol.modulus();
  const std::size_t k = N.size(), nh = static_cast<std::size_t>(H.order());
  DedupResult out;
  if (k == 1) {
    out.representatives.emplace_back(Hg, N);
    out.solutions = out.image = 1;
    out.exact_division = true;
    return out;
  }
  PairLayout lay{k, nh};
  const std::size_t nv = lay.num_vars(), ns = k - 1;
  auto loc = local_positions(H.order(), N);
  // integer matrix of d^1: sigma (exponents over N \ {1}) -> (kappa, epsilon) exponents
  IntMatrix T(nv, ns);
  auto col = [](std::size_t j) { return j - 1; };
  for (std::size_t h = 1; h < nh; ++h)
    for (std::size_t j = 1; j < k; ++j) {
      auto c = static_cast<std::size_t>(loc[static_cast<std::size_t>(H.conj(static_cast<int>(h), N[j]))]);
      if (c) T(lay.eps_var(h, j), col(c)) += 1;
      T(lay.eps_var(h, j), col(j)) -= 1;
    }
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 1; j < k; ++j) {
      auto c = static_cast<std::size_t>(loc[static_cast<std::size_t>(H.mul(N[i], N[j]))]);
      T(lay.kappa_var(i, j), col(i)) += 1;
      T(lay.kappa_var(i, j), col(j)) += 1;
      if (c) T(lay.kappa_var(i, j), col(c)) -= 1;
    }
  // sigma = s / (M |N|) is admissible iff T s = 0 mod |N|; its image is T s / |N| mod M
  std::vector<std::vector<std::int64_t>> image_gens;
  auto apply_T = [&](const std::vector<std::int64_t>& s, std::int64_t divide) {
    std::vector<std::int64_t> v(nv, 0);
    for (std::size_t r = 0; r < nv; ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < ns; ++c) acc += T(r, c) * s[c];
      if (acc % divide != 0) throw std::logic_error("coboundary lift is not divisible");
      v[r] = mod_norm(acc / divide, M);
    }
    return v;
  };
  for (std::size_t c = 0; c < ns; ++c) {
    std::vector<std::int64_t> e(ns, 0);
    e[c] = 1;
    image_gens.push_back(apply_T(e, 1));
  }
  {
    SparseSystem ker(ns);
    for (std::size_t r = 0; r < nv; ++r) {
      SparseSystem::Row row;
      for (std::size_t c = 0; c < ns; ++c)
        if (T(r, c)) row.emplace_back(c, T(r, c));
      if (!row.empty()) ker.add_row(std::move(row), 0);
    }
    auto ks = solve_affine_mod(ker, static_cast<std::int64_t>(k));
    if (!ks) throw std::logic_error("homogeneous system without solutions");
    for (const auto& g : ks->generators()) image_gens.push_back(apply_T(g, static_cast<std::int64_t>(k)));
  }

  // |image| straight from the vectors
  {
    IntMatrix Cm(nv, image_gens.size());
    for (std::size_t c = 0; c < image_gens.size(); ++c)
      for (std::size_t r = 0; r < nv; ++r) Cm(r, c) = image_gens[c][r];
    auto snf = smith_normal_form_mod(Cm, M);
    Count img = 1;
    for (auto d : snf.diag) img *= M / std::gcd(d, M);
    out.image = img;
  }
  Count total = 1;
  for (auto o : sol.orders()) total *= o;
  out.solutions = total;

  const std::size_t r = sol.generators().size();
  std::vector<std::int64_t> d;
  IntMatrix Pinv;
  if (r > 0) {
    IntMatrix A(r, image_gens.size() + r);
    for (std::size_t c = 0; c < image_gens.size(); ++c) {
      auto co = sol.coordinates(image_gens[c]);
      for (std::size_t i = 0; i < r; ++i) A(i, c) = co[i];
    }
    for (std::size_t i = 0; i < r; ++i) A(i, image_gens.size() + i) = mod_norm(sol.orders()[i], M);
    auto snf = smith_normal_form_mod(A, M, kTrackRows | kTrackInverses);
    d = snf.diag;
    Pinv = snf.Pinv;
  }
  Count classes = 1;
  for (auto v : d) classes *= v;
  if (classes > kClassGuard) throw std::length_error("too many isomorphism classes to enumerate");
  out.exact_division = out.image * classes == total;

  // mixed radix over the quotient coordinates, first coordinate slowest
  std::vector<std::int64_t> digit(d.size(), 0);
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(classes); ++t) {
    std::vector<std::int64_t> coeffs(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < d.size(); ++j) acc = mod_norm(acc + mod_mul(Pinv(i, j), digit[j], M), M);
      coeffs[i] = acc;
    }
    out.representatives.push_back(cochain_from_exponents(Hg, N, sol.element(coeffs), M));
    for (std::size_t j = d.size(); j-- > 0;) {
      if (++digit[j] < d[j]) break;
      digit[j] = 0;
    }
  }
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<char, int> dihedral_shape(int m, const std::vector<int>& elements) {
  const int n = 2 * m + 1;
  bool refl = std::any_of(elements.begin(), elements.end(), [&](int g) { return g >= n; });
  int sz = static_cast<int>(elements.size());
  return refl ? std::pair<char, int>{'D', sz / 2} : std::pair<char, int>{'Z', sz};
}

std::vector<DihedralFamily> dihedral_expected(int m, int p) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const int n = 2 * m + 1;
  std::vector<DihedralFamily> out;
  for (int x = 1; x <= n; ++x) {
    if (n % x) continue;
    for (int y = 1; y <= x; ++y) {
      if (x % y || p % y) continue;
      out.push_back({true, x, false, y, 1});
      out.push_back({false, x, false, y, static_cast<std::size_t>(y)});
    }
    if (p % x == 0) out.push_back({true, x, true, x, 1});
  }
  return out;
}

namespace {

std::string subgroup_name(const std::vector<int>& elems, const std::optional<int>& m) {
  if (m) {
    auto [c, x] = dihedral_shape(*m, elems);
    return std::string(1, c) + std::to_string(x);
  }
  return "order" + std::to_string(elems.size());
}

struct PairTask {
  Subgroup H;
  Subgroup N;
};

struct PairResult {
  PairSummary summary;
  std::vector<ClassificationEntry> entries;
  std::vector<std::string> failures;
};

PairResult run_pair(const CategoryPtr& cat, const PairTask& task, const ClassifyOptions& opt,
                    const std::optional<int>& dihedral_m) {
  PairResult res;
  const Subgroup& H = task.H;
  const FiniteGroup& G = cat->G();
  CategoryPtr catH = restrict_category(cat, H);
  GroupPtr Hg = catH->group();
  std::vector<int> N;
  for (int n : task.N.elements()) N.push_back(H.local(n));
  std::sort(N.begin(), N.end());
  auto& s = res.summary;
  s.H = H.elements();
  s.N = task.N.elements();
  s.H_name = subgroup_name(s.H, dihedral_m);
  s.N_name = subgroup_name(s.N, dihedral_m);
  s.modulus = opt.modulus ? *opt.modulus : default_pair_modulus(*catH, N.size());
  auto sol = solve_pairs(*catH, N, s.modulus);
  s.solvable = sol.has_value();
  std::vector<TotalCochain2> reps;
  if (sol) {
    DedupResult dd = dedupe_iso(*sol, Hg, N);
    reps = std::move(dd.representatives);
    s.solutions = dd.solutions;
    s.image = dd.image;
    s.exact_division = dd.exact_division;
    if (!dd.exact_division) res.failures.push_back("coboundary count does not divide for " + s.H_name + "/" + s.N_name);
  }
  s.classes = reps.size();
  if (opt.escalate) {
    std::int64_t M2 = s.modulus * H.order();
    auto sol2 = solve_pairs(*catH, N, M2);
    s.escalated_classes = sol2 ? dedupe_iso(*sol2, Hg, N).representatives.size() : 0;
    s.escalation_stable = *s.escalated_classes == s.classes;
  }
  if (opt.distinct) {
    for (std::size_t a = 0; a < reps.size() && s.distinct; ++a)
      for (std::size_t b = a + 1; b < reps.size() && s.distinct; ++b)
        if (h2tot_trivial_witness(reps[b] - reps[a], s.modulus)) s.distinct = false;
    if (!s.distinct) res.failures.push_back("isomorphic representatives for " + s.H_name + "/" + s.N_name);
  }
  const std::int64_t k = static_cast<std::int64_t>(N.size());
  const std::int64_t idx = G.order() / H.order();
  std::optional<Induction> ind;
  if (opt.verify) ind.emplace(cat, H);
  for (auto& x : reps) {
    ClassificationEntry e{s.H, s.N, x, k * idx, k, idx, prime_factors(k * idx), false, {}, false, false, {}};
    if (opt.char_p && (k * idx) % *opt.char_p == 0) continue;
    if (opt.verify) {
      std::string where = s.H_name + "/" + s.N_name;
      CenterAlgebra A = build_A(cat, H, x);
      e.props = check_algebra(A);
      const auto& p = e.props;
      bool ok = p.rigid && p.rigid_consistent && p.twist_trivial && p.beta_A && p.beta_A->as_integer() == k &&
                p.beta_1.as_integer() == idx && p.qdim.as_integer() == k * idx;
      e.cross_path = !algebra_difference(ind->induce_algebra(build_B(catH, x)), A).has_value();
      e.local_over_A1 = check_A_local_over_A1(cat, H, x, A).ok();
      e.verified = ok && e.cross_path && e.local_over_A1;
      if (!ok) res.failures.push_back("property report failed for " + where);
      if (!e.cross_path) res.failures.push_back("induced B differs from A for " + where);
      if (!e.local_over_A1) res.failures.push_back("A is not local over A_H for " + where);
    }
    res.entries.push_back(std::move(e));
  }
  s.emitted = res.entries.size();
  return res;
}

std::vector<int> conjugate_set(const FiniteGroup& G, int g, const std::vector<int>& S) {
  std::vector<int> out;
  for (int x : S) out.push_back(G.conj(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ClassificationReport classify(const CategoryPtr& cat, const ClassifyOptions& opt) {
  const FiniteGroup& G = cat->G();
  std::optional<int> dm;
  if (opt.expect_dihedral) dm = opt.expect_dihedral->first;
  if (opt.modulus && *opt.modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (opt.char_p && *opt.char_p < 2) throw std::invalid_argument("characteristic must be a prime");
  if (dm && G.order() != 2 * (2 * *dm + 1)) throw std::invalid_argument("expectation does not fit the group");

  std::vector<PairTask> tasks;
  for (auto& H : enumerate_subgroups(cat->group()))
    for (auto& N : normal_subgroups(H)) tasks.push_back({H, N});

  std::vector<std::optional<PairResult>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = run_pair(cat, tasks[i], opt, dm);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ClassificationReport rep;
  rep.modulus_override = opt.modulus;
  for (auto& slot : slots) {
    PairResult& r = *slot;
    r.summary.first_entry = rep.entries.size();
    rep.pairs.push_back(r.summary);
    for (auto& e : r.entries) rep.entries.push_back(std::move(e));
    for (auto& f : r.failures) rep.failures.push_back(std::move(f));
  }

  if (opt.conjugation_dedup) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> seen;  // key -> pair index
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
      auto& pr = rep.pairs[i];
      std::pair<std::vector<int>, std::vector<int>> key{pr.H, pr.N};
      for (int g = 0; g < G.order(); ++g) key = std::min(key, {conjugate_set(G, g, pr.H), conjugate_set(G, g, pr.N)});
      auto [it, fresh] = seen.emplace(key, i);
      if (fresh) {
        rep.conjugation_classes += pr.emitted;
        continue;
      }
      const auto& first = rep.pairs[it->second];
      for (std::size_t e = 0; e < pr.emitted; ++e)
        if (first.emitted > 0) rep.entries[pr.first_entry + e].conjugate_of = first.first_entry;
    }
  }

  if (opt.expect_dihedral) {
    auto [m, p] = *opt.expect_dihedral;
    ExpectedComparison cmp{m, p, {}, true, true};
    auto fam = dihedral_expected(m, p);
    for (const auto& pr : rep.pairs) {
      auto [hc, hx] = dihedral_shape(m, pr.H);
      auto [nc, ny] = dihedral_shape(m, pr.N);
      ExpectedRow row{pr.H, pr.N, pr.H_name, pr.N_name, 0, pr.classes, false, false, {}};
      for (const auto& f : fam)
        if (f.H_dihedral == (hc == 'D') && f.x == hx && f.N_dihedral == (nc == 'D') && f.y == ny) row.expected = f.count;
      row.match = row.expected == row.actual;
      bool edge = hc == 'D' && nc == 'D' && pr.H == pr.N;
      if (!row.match && edge) {
        row.flagged = true;
        row.note = row.actual == 0 ? "solver finds no kappa trivializing omega on this dihedral subgroup"
                                   : "solver finds a trivialization the closed form does not list";
      }
      if (nc == 'Z' && !row.match) cmp.cyclic_match = false;
      if (!row.match && !row.flagged) cmp.unflagged_ok = false;
      cmp.rows.push_back(std::move(row));
    }
    rep.comparison = std::move(cmp);
  }
  if (!rep.failures.empty()) {
    std::string msg = "classification consistency failure:";
    for (const auto& f : rep.failures) msg += "\n  " + f;
    throw std::logic_error(msg);
  }
  return rep;
}

}  // namespace dwcat
