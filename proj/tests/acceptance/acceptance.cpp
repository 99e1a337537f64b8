// Acceptance checks, one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "dwcat/classification.hpp"
#include "dwcat/induction.hpp"
#include "dwcat/io.hpp"
#include "dwcat/local_modules.hpp"

using namespace dwcat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

CategoryPtr dihedral(int m, int p) { return make_category(make_dihedral_odd(m), dihedral_omega_p(m, p)); }

Subgroup rotations(const CategoryPtr& cat, int m) {
  std::vector<int> r(static_cast<std::size_t>(2 * m + 1));
  std::iota(r.begin(), r.end(), 0);
  return Subgroup(cat->group(), r);
}

// D_3 and D_5 with every omega_p
template <class F>
void for_matrix(F&& f) {
  for (int m : {1, 2})
    for (int p = 0; p <= 4 * m + 1; ++p) f(m, p);
}

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  std::string bad;
  for (int m = 1; m <= 3; ++m) {
    auto D = make_dihedral_odd(m);
    for (int p = 0; p <= 4 * m + 1; ++p) {
      Cochain w = dihedral_omega_p(D, m, p);
      if (!w.is_normalized() || cocycle_violation(w)) bad += " (m=" + std::to_string(m) + ",p=" + std::to_string(p) + ")";
      ++checked;
    }
  }
  double s = seconds_since(t0);
  return {bad.empty() && s < 10.0,
          std::to_string(checked) + " cocycles swept over all 4-tuples in " + fmt_s(s) + " (limit 10s)" +
              (bad.empty() ? "" : "; failing:" + bad)};
}

Outcome criterion2() {
  std::string d;
  bool ok = true;
  for (int m : {1, 2}) {
    auto D = make_dihedral_odd(m);
    std::int64_t M = static_cast<std::int64_t>(D->order()) * D->order();
    auto order = cohomology_group(D, 3, M).order();
    ok = ok && order == static_cast<std::uint64_t>(4 * m + 2);
    d += "m=" + std::to_string(m) + ": |H3| = " + std::to_string(order) + " (want " + std::to_string(4 * m + 2) + ") ";
  }
  return {ok, d};
}

Outcome criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t cases = 0, tuples = 0;
  std::string bad;
  auto run = [&](const GroupPtr& G, const Cochain& w, const std::string& name) {
    auto cat = make_category(G, w);
    for (const auto& r : verify_cocycle_identities(*cat)) {
      tuples += r.checked;
      if (!r.ok()) bad += " " + name + ":" + r.name;
    }
    ++cases;
  };
  for (int n = 1; n <= 6; ++n) {
    auto Z = make_cyclic(n);
    run(Z, Cochain(Z, 3), "Z" + std::to_string(n) + "/0");
    auto gens = cocycle_generators(Z, 3, static_cast<std::int64_t>(n) * n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      run(Z, gens[i], "Z" + std::to_string(n) + "/g" + std::to_string(i));
      // a second multiple, so the sweep is not only over generators
      run(Z, gens[i] + gens[i], "Z" + std::to_string(n) + "/2g" + std::to_string(i));
    }
  }
  for_matrix([&](int m, int p) {
    run(make_dihedral_odd(m), dihedral_omega_p(m, p), "D" + std::to_string(2 * m + 1) + "/p" + std::to_string(p));
  });
  double s = seconds_since(t0);
  return {bad.empty() && s < 60.0, std::to_string(cases) + " (G, omega) cases, " + std::to_string(tuples) +
                                       " tuples, six identities each, " + fmt_s(s) + " (limit 60s)" +
                                       (bad.empty() ? "" : "; violated:" + bad)};
}

Outcome criterion4() {
  std::size_t entries = 0;
  std::string bad;
  for_matrix([&](int m, int p) {
    auto rep = classify(dihedral(m, p), {});
    const int G = 2 * (2 * m + 1);
    for (const auto& e : rep.entries) {
      ++entries;
      auto N = static_cast<std::int64_t>(e.N.size()), idx = G / static_cast<std::int64_t>(e.H.size());
      bool ok = e.verified && e.props.rigid && e.props.rigid_consistent && e.props.special && e.props.twist_trivial &&
                e.props.connected == 1 && e.beta_A == N && e.beta_1 == idx && e.qdim == N * idx;
      if (!ok) bad += " D" + std::to_string(2 * m + 1) + "/p" + std::to_string(p) + "(|H|=" + std::to_string(e.H.size()) +
                      ",|N|=" + std::to_string(e.N.size()) + ")";
    }
  });
  return {bad.empty() && entries > 0,
          std::to_string(entries) + " representatives checked" + (bad.empty() ? "" : "; failing:" + bad)};
}

Outcome criterion5() {
  std::size_t triples = 0, pairs = 0;
  std::string bad;
  for_matrix([&](int m, int p) {
    auto cat = dihedral(m, p);
    Induction I(cat, rotations(cat, m));
    auto lines = simple_lines(I.source());
    auto tag = "D" + std::to_string(2 * m + 1) + "/p" + std::to_string(p);
    std::set<std::string> seen;
    for (const auto& V : lines)
      for (const auto& W : lines) {
        ++pairs;
        auto mu = I.lax_mu(V, W), nu = I.oplax_nu(V, W);
        auto IVW = I.induce(tensor(V, W));
        if (mu * nu != LinearMap::identity(IVW.dim())) seen.insert("separable");
        for (const auto& U : lines) {
          ++triples;
          for (const auto& f : verify_frobenius_monoidal(I, V, W, U).failures) seen.insert(f.substr(0, f.find(':')));
        }
      }
    for (const auto& f : seen) bad += " " + tag + ":" + f;
  });
  return {bad.empty(), std::to_string(pairs) + " pairs and " + std::to_string(triples) +
                           " triples of simple lines for Z3 <= D3 and Z5 <= D5, all omega_p" +
                           (bad.empty() ? "" : "; failing:" + bad)};
}

Outcome criterion6() {
  std::size_t compared = 0;
  std::string bad;
  for_matrix([&](int m, int p) {
    auto cat = dihedral(m, p);
    ClassifyOptions opt;
    opt.verify = false;
    auto rep = classify(cat, opt);
    for (const auto& e : rep.entries) {
      Subgroup H(cat->group(), e.H);
      Induction I(cat, H);
      auto diff = algebra_difference(I.induce_algebra(build_B(I.source(), e.data)), build_A(cat, H, e.data));
      ++compared;
      if (diff) bad += " D" + std::to_string(2 * m + 1) + "/p" + std::to_string(p) + ":" + *diff;
    }
  });
  return {bad.empty() && compared > 0,
          std::to_string(compared) + " entries compared entrywise" + (bad.empty() ? "" : "; differing:" + bad)};
}

Outcome criterion7() {
  std::mt19937_64 rng(20240611);
  std::size_t trials = 0;
  std::string bad;
  std::vector<std::pair<CategoryPtr, Subgroup>> cells;
  for_matrix([&](int m, int p) {
    auto cat = dihedral(m, p);
    for (auto& H : enumerate_subgroups(cat->group())) cells.emplace_back(cat, H);
  });
  std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
  for (int t = 0; t < 120; ++t) {
    const auto& [cat, H] = cells[t < static_cast<int>(cells.size()) ? static_cast<std::size_t>(t) : pick(rng)];
    Induction I(cat, H);
    auto V = random_module(I.source(), rng, 3);
    auto L = induced_module(I, V);
    ++trials;
    std::string why;
    if (L.obj.dim() != I.index() * V.dim()) why = "dim";
    else if (!is_local(L)) why = "not local";
    else {
      try {
        auto ex = decompose_and_extract(I, L);
        if (!ex.V.same_tables(V) && !structurally_isomorphic(ex.V, V)) why = "extracted module differs";
      } catch (const std::exception& e) {
        why = e.what();
      }
    }
    if (!why.empty()) bad += " [trial " + std::to_string(t) + ": " + why + "]";
  }
  return {bad.empty() && trials >= 100, std::to_string(trials) + " randomized modules over " +
                                            std::to_string(cells.size()) + " (G, omega, H) cells" +
                                            (bad.empty() ? "" : ";" + bad)};
}

Outcome criterion8() {
  std::string d;
  bool ok = true;
  for_matrix([&](int m, int p) {
    ClassifyOptions opt;
    opt.verify = false;
    opt.expect_dihedral = std::make_pair(m, p);
    auto rep = classify(dihedral(m, p), opt);
    const auto& c = *rep.comparison;
    for (const auto& r : c.rows) {
      if (r.match) continue;
      d += " D" + std::to_string(2 * m + 1) + "/p" + std::to_string(p) + " " + r.H_name + "/" + r.N_name + ": " +
           std::to_string(r.actual) + " vs " + std::to_string(r.expected) + (r.flagged ? " (flagged)" : " (unflagged)");
    }
    ok = ok && c.cyclic_match && c.unflagged_ok;
  });
  return {ok, d.empty() ? "every family matches" : "mismatches:" + d};
}

Outcome criterion9() {
  std::size_t cells = 0;
  std::string bad;
  using R = boost::rational<std::int64_t>;
  for_matrix([&](int m, int p) {
    auto cat = dihedral(m, p);
    const std::int64_t G = cat->G().order();
    for (auto& H : enumerate_subgroups(cat->group())) {
      auto catH = restrict_category(cat, H);
      for (auto& N : normal_subgroups(catH->group())) {
        ++cells;
        const std::int64_t h = H.order(), n = N.order();
        auto r = fpdim_report(G, h, n);
        bool ok = r.fpdim_rep_loc == R(h * h, n * n) && r.consistent && r.rep_matches && r.rep_loc_matches &&
                  r.dim_A == R(G * n, h) && (n != h || r.fpdim_rep_loc == R(1));
        auto sol = solve_pairs(*catH, N.elements(), default_pair_modulus(*catH, static_cast<std::size_t>(n)));
        if (sol) {
          auto x = dedupe_iso(*sol, catH->group(), N.elements()).representatives.front();
          auto built = fpdim_report(G, h, n, static_cast<std::int64_t>(build_A(cat, H, x, false).dim()));
          ok = ok && built.consistent;
        }
        if (!ok) bad += " (|G|=" + std::to_string(G) + ",|H|=" + std::to_string(h) + ",|N|=" + std::to_string(n) + ")";
      }
    }
  });
  return {bad.empty(), std::to_string(cells) + " (G, H, N) cells" + (bad.empty() ? "" : "; failing:" + bad)};
}

// normalized mu_M-valued pairs for (H, N) passing the listed conditions
std::vector<TotalCochain2> enumerate_pairs(const Category& catH, const std::vector<int>& N, std::int64_t M,
                                           const std::set<std::string>& ignore) {
  const std::size_t k = N.size(), nh = static_cast<std::size_t>(catH.G().order());
  PairLayout L{k, nh};
  std::vector<std::int64_t> v(L.num_vars(), 0);
  std::vector<TotalCochain2> out;
  while (true) {
    TotalCochain2 x(catH.group(), N);
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t j = 1; j < k; ++j) x.kappa[i * k + j] = Phase(v[L.kappa_var(i, j)], M);
    for (std::size_t h = 1; h < nh; ++h)
      for (std::size_t j = 1; j < k; ++j) x.eps[h * k + j] = Phase(v[L.eps_var(h, j)], M);
    bool keep = true;
    for (const auto& c : cocycle_data_violations(catH, x)) keep = keep && ignore.count(c);
    if (keep) out.push_back(x);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == M) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

bool gauge_isomorphic(const CenterAlgebra& A, const CenterAlgebra& B, std::int64_t K) {
  const std::size_t k = A.dim();
  std::vector<std::int64_t> s(k, 0);
  while (true) {
    LinearMap f(k, k);
    for (std::size_t j = 0; j < k; ++j) f.add(j, j, Phase(s[j], K));
    if (f * A.mult == B.mult * tensor(f, f) && f * A.unit == B.unit && is_morphism(f, A.obj, B.obj)) return true;
    std::size_t j = 1;
    while (j < k && ++s[j] == K) s[j++] = 0;
    if (j >= k) return false;
  }
}

// classes of pairs under gauge equivalence, by brute force over sigma in mu_K
std::size_t gauge_classes(const std::vector<TotalCochain2>& xs, const GroupPtr& H, const std::vector<int>& N,
                          std::int64_t K) {
  std::vector<std::size_t> parent(xs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  const std::size_t k = N.size();
  std::vector<std::int64_t> s(k, 0);
  while (true) {
    std::vector<Phase> sigma(k);
    for (std::size_t j = 1; j < k; ++j) sigma[j] = Phase(s[j], K);
    auto d = total_d1(H, N, sigma);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto y = xs[i] + d;
      for (std::size_t j = 0; j < xs.size(); ++j)
        if (xs[j].kappa == y.kappa && xs[j].eps == y.eps) parent[find(i)] = find(j);
    }
    std::size_t j = 1;
    while (j < k && ++s[j] == K) s[j++] = 0;
    if (j >= k) break;
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < xs.size(); ++i) roots.insert(find(i));
  return roots.size();
}

Outcome criterion10() {
  auto cat = dihedral(1, 0);
  Subgroup Z3(cat->group(), {0, 1, 2});
  auto catH = restrict_category(cat, Z3);
  std::vector<int> N{0, 1, 2};
  const std::int64_t M = default_pair_modulus(*catH, 3);
  auto sol = solve_pairs(*catH, N, M);
  std::vector<TotalCochain2> reps;
  if (sol) reps = dedupe_iso(*sol, catH->group(), N).representatives;

  bool witness_free = true, gauge_free = true;
  std::vector<CenterAlgebra> B;
  for (const auto& x : reps) B.push_back(build_B(catH, x));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      witness_free = witness_free && !h2tot_trivial_witness(reps[i] - reps[j], M);
      gauge_free = gauge_free && !gauge_isomorphic(B[i], B[j], M * 3);
    }

  // the same count with the braided commutativity condition dropped, for comparison
  auto relaxed = enumerate_pairs(*catH, N, 3, {"commutativity"});
  std::size_t relaxed_classes = gauge_classes(relaxed, catH->group(), N, 9);

  bool ok = reps.size() == 3 && witness_free && gauge_free;
  return {ok, std::to_string(reps.size()) + " representative(s) emitted (want 3); pairwise witness-free: " +
                  (witness_free ? "yes" : "no") + ", gauge search: " + (gauge_free ? "no isomorphism" : "isomorphic") +
                  "; without the commutativity condition the orbit count is " + std::to_string(relaxed_classes)};
}

Outcome criterion11() {
  std::string bad;
  std::size_t runs = 0;
  for (auto [m, p] : {std::pair{1, 0}, std::pair{1, 3}, std::pair{2, 5}}) {
    io::GroupSpec g{make_dihedral_odd(m), io::json{{"preset", "dihedral_odd"}, {"m", m}}, m};
    io::CocycleSpec c{dihedral_omega_p(m, p), "dihedral:" + std::to_string(p), p};
    auto cat = make_category(g.G, c.omega);
    std::string first;
    for (int jobs : {1, 2, 4, 8}) {
      ClassifyOptions opt;
      opt.jobs = jobs;
      opt.expect_dihedral = std::make_pair(m, p);
      auto text = io::classification_json(classify(cat, opt), g, c).dump(2);
      ++runs;
      if (first.empty()) first = text;
      else if (text != first) bad += " D" + std::to_string(2 * m + 1) + "/p" + std::to_string(p) + " jobs=" + std::to_string(jobs);
    }
  }
  return {bad.empty(), std::to_string(runs) + " reports over jobs in {1,2,4,8}" + (bad.empty() ? ", byte-identical" : "; differing:" + bad)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> which;
  app.add_option("--criterion", which, "criterion number (repeatable); all when omitted")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);
  if (which.empty()) {
    which.resize(11);
    std::iota(which.begin(), which.end(), 1);
  }
  const std::map<int, std::function<Outcome()>> table{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},   {5, criterion5},  {6, criterion6},
      {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, criterion11}};
  bool all = true;
  for (int c : which) {
    Outcome o;
    try {
      o = table.at(c)();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %d: %s %s\n", c, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
