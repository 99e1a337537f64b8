#include <cstdlib>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "dwcat/io.hpp"

using namespace dwcat;
using io::InputError;
using io::json;

namespace {

enum Exit : int { kOk = 0, kMath = 1, kInput = 2, kExpectation = 3 };

struct Context {
  io::GroupSpec group;
  io::CocycleSpec cocycle;
  CategoryPtr cat;
};

Context load_context(const std::string& group_arg, const std::string& cocycle_arg, bool validate = true) {
  std::optional<io::GroupSpec> g;
  if (!group_arg.empty()) g = io::load_group(group_arg);
  else if (!cocycle_arg.empty()) g = io::cocycle_group(cocycle_arg);
  else throw InputError("need --group or --cocycle");
  io::CocycleSpec c = cocycle_arg.empty() ? io::load_cocycle("trivial", g, validate)
                                          : io::load_cocycle(cocycle_arg, g, validate);
  CategoryPtr cat = validate ? make_category(g->G, c.omega)
                             : std::make_shared<const Category>(g->G, c.omega, TauGamma(c.omega));
  return {std::move(*g), std::move(c), std::move(cat)};
}

Subgroup load_normal(const std::string& arg, const Subgroup& H) {
  Subgroup N = io::parse_subgroup(arg, H.parent());
  const FiniteGroup& G = *H.parent();
  for (int n : N.elements()) {
    if (!H.contains(n)) throw InputError("N is not contained in H");
    for (int h : H.elements())
      if (!N.contains(G.conj(h, n))) throw InputError("N is not normal in H");
  }
  return N;
}

std::vector<int> local_elements(const Subgroup& H, const Subgroup& N) {
  std::vector<int> out;
  for (int n : N.elements()) out.push_back(H.local(n));
  std::sort(out.begin(), out.end());
  return out;
}

// (kappa, epsilon) from a file, or the class-th representative from the solver
std::optional<TotalCochain2> select_data(const CategoryPtr& cat, const Subgroup& H, const Subgroup& N,
                                         const std::string& data_arg, std::size_t cls) {
  CategoryPtr catH = restrict_category(cat, H);
  std::vector<int> Nl = local_elements(H, N);
  if (!data_arg.empty()) {
    json j = io::read_json(data_arg);
    if (j.contains("N") && j.at("N").get<std::vector<int>>() != N.elements())
      throw InputError("data file names a different N");
    if (j.contains("H") && j.at("H").get<std::vector<int>>() != H.elements())
      throw InputError("data file names a different H");
    return io::parse_total_cochain(j, catH->group(), Nl);
  }
  auto sol = solve_pairs(*catH, Nl, default_pair_modulus(*catH, Nl.size()));
  if (!sol) return std::nullopt;
  auto reps = dedupe_iso(*sol, catH->group(), Nl).representatives;
  if (cls >= reps.size())
    throw InputError("class index " + std::to_string(cls) + " out of range; " + std::to_string(reps.size()) +
                     " classes");
  return reps[cls];
}

int jobs_from_env() {
  const char* v = std::getenv("DWCAT_JOBS");
  if (!v || !*v) return 1;
  try {
    std::size_t pos = 0;
    int j = std::stoi(v, &pos);
    if (pos != std::string(v).size() || j < 1) throw std::invalid_argument(v);
    return j;
  } catch (const std::exception&) {
    throw InputError(std::string("DWCAT_JOBS must be a positive integer, got ") + v);
  }
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

json yd_violations_json(const std::vector<YdViolation>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back({{"kind", x.kind}, {"where", x.where}});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebras in twisted Drinfeld centers of finite groups"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string group_arg, cocycle_arg, out = "-";
  auto add_cat = [&](CLI::App* sub, bool need_cocycle) {
    sub->add_option("--group", group_arg, "group spec: JSON file, inline JSON, cyclic:n or dihedral_odd:m");
    auto* c = sub->add_option("--cocycle", cocycle_arg, "cocycle file, dihedral:p or trivial");
    if (need_cocycle) c->required();
    sub->add_option("--out", out, "output file (default stdout)");
  };

  // group
  std::optional<std::int64_t> cohom_M;
  {
    auto* sub = app.add_subcommand("group", "summarize a group and its subgroups");
    sub->add_option("--group", group_arg, "group spec: JSON file, inline JSON, cyclic:n or dihedral_odd:m")->required();
    sub->add_option("--cohomology", cohom_M, "also report H^1..H^3 with mu_M coefficients");
    sub->add_option("--out", out, "output file (default stdout)");
    sub->callback([&] {
      action = [&] {
        auto g = io::load_group(group_arg);
        if (cohom_M && (*cohom_M < 1 || *cohom_M > io::kModulusGuard)) throw InputError("modulus out of range");
        io::write_json(io::group_summary(g, cohom_M), out);
        return kOk;
      };
    });
  }

  // cocycle gen / check
  std::optional<int> gen_p, gen_index;
  std::optional<std::int64_t> gen_M;
  {
    auto* coc = app.add_subcommand("cocycle", "generate or check 3-cocycles");
    coc->require_subcommand(1);
    auto* gen = coc->add_subcommand("gen", "write a 3-cocycle file");
    gen->add_option("--group", group_arg, "group spec: JSON file, inline JSON, cyclic:n or dihedral_odd:m")->required();
    gen->add_option("--dihedral", gen_p, "the dihedral family member omega_p");
    gen->add_option("--generator", gen_index, "index into the solver's cocycle generators");
    gen->add_option("--modulus", gen_M, "coefficients mu_M for --generator (default |G|^2)");
    gen->add_option("--out", out, "output file (default stdout)");
    gen->callback([&] {
      action = [&] {
        auto g = io::load_group(group_arg);
        Cochain w(g.G, 3);
        json extra;
        if (gen_p && gen_index) throw InputError("--dihedral and --generator are exclusive");
        if (gen_p) {
          w = io::load_cocycle("dihedral:" + std::to_string(*gen_p), g, true).omega;
        } else if (gen_index) {
          std::int64_t M = gen_M ? *gen_M : std::int64_t(g.G->order()) * g.G->order();
          if (M < 2 || M > io::kModulusGuard) throw InputError("modulus out of range");
          auto gens = cocycle_generators(g.G, 3, M);
          if (*gen_index < 0 || static_cast<std::size_t>(*gen_index) >= gens.size())
            throw InputError("generator index out of range; " + std::to_string(gens.size()) + " generators");
          w = gens[static_cast<std::size_t>(*gen_index)];
        }
        io::write_json(io::cochain_json(w, g.spec), out);
        return kOk;
      };
    });
    auto* chk = coc->add_subcommand("check", "check normalization and the cocycle condition");
    chk->add_option("--group", group_arg, "group spec: JSON file, inline JSON, cyclic:n or dihedral_odd:m");
    chk->add_option("--cocycle", cocycle_arg, "cocycle file")->required();
    chk->add_option("--out", out, "output file (default stdout)");
    chk->callback([&] {
      action = [&] {
        std::optional<io::GroupSpec> g;
        if (!group_arg.empty()) g = io::load_group(group_arg);
        else g = io::cocycle_group(cocycle_arg);
        auto c = io::load_cocycle(cocycle_arg, g, false);
        auto v = cocycle_violation(c.omega);
        bool normalized = c.omega.is_normalized();
        json j{{"normalized", normalized},
               {"cocycle", !v.has_value()},
               {"violation", v ? json(*v) : json(nullptr)},
               {"denominator", c.omega.lcm_denominator()}};
        io::write_json(j, out);
        return normalized && !v ? kOk : kMath;
      };
    });
  }

  // identities
  {
    auto* sub = app.add_subcommand("identities", "sweep the tau/gamma identities over all tuples");
    add_cat(sub, true);
    sub->callback([&] {
      action = [&] {
        auto ctx = load_context(group_arg, cocycle_arg, false);
        auto res = verify_cocycle_identities(*ctx.cat);
        auto v = cocycle_violation(ctx.cocycle.omega);
        bool ok = std::all_of(res.begin(), res.end(), [](const auto& r) { return r.ok(); });
        json j{{"normalized", ctx.cocycle.omega.is_normalized()},
               {"cocycle", !v.has_value()},
               {"identities", io::identities_json(res)},
               {"ok", ok}};
        io::write_json(j, out);
        return ok && !v && ctx.cocycle.omega.is_normalized() ? kOk : kMath;
      };
    });
  }

  std::string module_arg, subgroup_arg, normal_arg, data_arg, algebra_arg, kind = "A";
  std::size_t cls = 0;
  bool verify_functor = false;

  // module check
  {
    auto* mod = app.add_subcommand("module", "monomial twisted Yetter-Drinfeld modules");
    mod->require_subcommand(1);
    auto* chk = mod->add_subcommand("check", "check the module axioms");
    add_cat(chk, false);
    chk->add_option("--module", module_arg, "module file")->required();
    chk->add_option("--subgroup", subgroup_arg, "the module lives over this subgroup");
    chk->callback([&] {
      action = [&] {
        auto ctx = load_context(group_arg, cocycle_arg);
        CategoryPtr cat = ctx.cat;
        if (!subgroup_arg.empty()) cat = restrict_category(cat, io::parse_subgroup(subgroup_arg, ctx.group.G));
        auto V = io::parse_module(io::read_json(module_arg), cat);
        auto v = check_yd(V);
        json j{{"dim", V.dim()}, {"valid", v.empty()}, {"violations", yd_violations_json(v)}};
        io::write_json(j, out);
        return v.empty() ? kOk : kMath;
      };
    });
  }

  // algebra build / verify
  {
    auto* alg = app.add_subcommand("algebra", "build and verify algebras");
    alg->require_subcommand(1);
    auto* build = alg->add_subcommand("build", "build A(H, N, kappa, epsilon), B or A_H");
    add_cat(build, false);
    build->add_option("--subgroup", subgroup_arg, "elements of H, comma separated, or all")->required();
    build->add_option("--normal", normal_arg, "N, normal in H (default: trivial)");
    build->add_option("--data", data_arg, "kappa/epsilon file; a classify entry works");
    build->add_option("--class", cls, "pick this solver representative when --data is absent");
    build->add_option("--kind", kind, "A (default), B (over H) or AH")->check(CLI::IsMember({"A", "B", "AH"}));
    build->callback([&] {
      action = [&] {
        auto ctx = load_context(group_arg, cocycle_arg);
        Subgroup H = io::parse_subgroup(subgroup_arg, ctx.group.G);
        if (kind == "AH") {
          io::write_json(io::algebra_json(build_AH(ctx.cat, H)), out);
          return kOk;
        }
        Subgroup N = normal_arg.empty() ? Subgroup(ctx.group.G, {0}) : load_normal(normal_arg, H);
        auto x = select_data(ctx.cat, H, N, data_arg, cls);
        if (!x) {
          std::cerr << "no (kappa, epsilon) exist for this pair\n";
          return kMath;
        }
        CategoryPtr catH = restrict_category(ctx.cat, H);
        auto bad = cocycle_data_violations(*catH, *x);
        if (!bad.empty()) {
          io::write_json({{"violations", bad}}, out);
          return kMath;
        }
        CenterAlgebra A = kind == "B" ? build_B(catH, *x) : build_A(ctx.cat, H, *x);
        json j = io::algebra_json(A);
        j["H"] = H.elements();
        j["N"] = N.elements();
        j["data"] = io::total_cochain_json(*x);
        io::write_json(j, out);
        return kOk;
      };
    });
    auto* ver = alg->add_subcommand("verify", "run every algebra check on a dump");
    add_cat(ver, false);
    ver->add_option("--algebra", algebra_arg, "algebra dump from algebra build")->required();
    ver->add_option("--subgroup", subgroup_arg, "the algebra lives over this subgroup");
    ver->callback([&] {
      action = [&] {
        auto ctx = load_context(group_arg, cocycle_arg);
        CategoryPtr cat = ctx.cat;
        if (!subgroup_arg.empty()) cat = restrict_category(cat, io::parse_subgroup(subgroup_arg, ctx.group.G));
        auto A = io::parse_algebra(io::read_json(algebra_arg), cat);
        auto p = check_algebra(A);
        io::write_json(io::property_json(p), out);
        return p.rigid && p.rigid_consistent ? kOk : kMath;
      };
    });
  }

  // induce
  {
    auto* sub = app.add_subcommand("induce", "induce a module from a subgroup; output is a module over A_H");
    add_cat(sub, false);
    sub->add_option("--subgroup", subgroup_arg, "elements of H, comma separated, or all")->required();
    sub->add_option("--module", module_arg, "module over the subgroup")->required();
    sub->add_flag("--verify", verify_functor, "check the Frobenius monoidal axioms on (V, V, V)");
    sub->callback([&] {
      action = [&] {
        auto ctx = load_context(group_arg, cocycle_arg);
        Induction I(ctx.cat, io::parse_subgroup(subgroup_arg, ctx.group.G));
        auto V = io::parse_module(io::read_json(module_arg), I.source());
        if (auto v = check_yd(V); !v.empty()) throw InputError("input module fails " + v.front().kind);
        AlgebraModule L = induced_module(I, V);
        json j = io::algebra_module_json(L);
        int rc = check_yd(L.obj).empty() ? kOk : kMath;
        if (verify_functor) {
          auto r = verify_frobenius_monoidal(I, V, V, V);
          j["frobenius_monoidal"] = {{"ok", r.ok()}, {"failures", r.failures}};
          if (!r.ok()) rc = kMath;
        }
        io::write_json(j, out);
        return rc;
      };
    });
  }

  // roundtrip
  {
    auto* sub = app.add_subcommand("roundtrip", "induce and extract again, or extract and induce again");
    add_cat(sub, false);
    sub->add_option("--subgroup", subgroup_arg, "elements of H, comma separated, or all")->required();
    sub->add_option("--module", module_arg, "module over the subgroup, or a module over A_H (with rho)")->required();
    sub->callback([&] {
      action = [&] {
        auto ctx = load_context(group_arg, cocycle_arg);
        Induction I(ctx.cat, io::parse_subgroup(subgroup_arg, ctx.group.G));
        json in = io::read_json(module_arg);
        json j;
        bool ok = false;
        std::optional<MonomialYDModule> source;
        AlgebraModule L;
        if (in.contains("rho")) {
          j["mode"] = "extract";
          L = io::parse_algebra_module(in, ctx.cat);
          if (auto v = check_yd(L.obj); !v.empty()) throw InputError("input module fails " + v.front().kind);
          if (L.alg.dim() != I.index()) throw InputError("module is not over A_H for this subgroup");
        } else {
          j["mode"] = "induce";
          source = io::parse_module(in, I.source());
          if (auto v = check_yd(*source); !v.empty()) throw InputError("input module fails " + v.front().kind);
          L = induced_module(I, *source);
        }
        j["module"] = check_module(L).ok();
        j["local"] = is_local(L);
        j["dim"] = L.obj.dim();
        try {
          Extraction ex = decompose_and_extract(I, L);
          j["extracted_dim"] = ex.V.dim();
          if (source) {
            ok = structurally_isomorphic(*source, ex.V).has_value() && L.obj.dim() == I.index() * source->dim();
          } else {
            ok = structurally_isomorphic(I.induce(ex.V), L.obj).has_value();
          }
        } catch (const std::invalid_argument& e) {
          j["error"] = e.what();
        }
        ok = ok && j["module"].get<bool>() && j["local"].get<bool>();
        j["ok"] = ok;
        io::write_json(j, out);
        return ok ? kOk : kMath;
      };
    });
  }

  // localmod
  {
    auto* sub = app.add_subcommand("localmod", "FPdim accounting and locality of A over A_H");
    add_cat(sub, false);
    sub->add_option("--subgroup", subgroup_arg, "elements of H, comma separated, or all")->required();
    sub->add_option("--normal", normal_arg, "N, normal in H (default: trivial)");
    sub->add_option("--data", data_arg, "kappa/epsilon file; a classify entry works");
    sub->add_option("--class", cls, "pick this solver representative when --data is absent");
    sub->callback([&] {
      action = [&] {
        auto ctx = load_context(group_arg, cocycle_arg);
        Subgroup H = io::parse_subgroup(subgroup_arg, ctx.group.G);
        Subgroup N = normal_arg.empty() ? Subgroup(ctx.group.G, {0}) : load_normal(normal_arg, H);
        auto x = select_data(ctx.cat, H, N, data_arg, cls);
        if (!x) {
          std::cerr << "no (kappa, epsilon) exist for this pair\n";
          return kMath;
        }
        CenterAlgebra A = build_A(ctx.cat, H, *x);
        auto f = fpdim_report(ctx.group.G->order(), H.order(), N.order(), static_cast<std::int64_t>(A.dim()));
        auto loc = check_A_local_over_A1(ctx.cat, H, *x, A);
        auto q = [](const boost::rational<std::int64_t>& r) {
          return std::to_string(r.numerator()) + (r.denominator() == 1 ? "" : "/" + std::to_string(r.denominator()));
        };
        json j{{"H", H.elements()},
               {"N", N.elements()},
               {"fpdim",
                {{"center", q(f.fpdim_center)},
                 {"dim_A", q(f.dim_A)},
                 {"rep", q(f.fpdim_rep)},
                 {"rep_loc", q(f.fpdim_rep_loc)},
                 {"rep_matches", f.rep_matches},
                 {"rep_loc_matches", f.rep_loc_matches},
                 {"consistent", f.consistent}}},
               {"local_over_AH",
                {{"subalgebra", loc.subalgebra},
                 {"module", loc.module},
                 {"local", loc.local},
                 {"b_subalgebra", loc.b_subalgebra}}}};
        bool ok = f.rep_matches && f.rep_loc_matches && f.consistent && loc.ok();
        j["ok"] = ok;
        io::write_json(j, out);
        return ok ? kOk : kMath;
      };
    });
  }

  // classify
  ClassifyOptions copt;
  std::optional<int> jobs;
  std::optional<std::string> expect;
  bool skip_verify = false;
  {
    auto* sub = app.add_subcommand("classify", "classify connected etale algebras A(H, N, kappa, epsilon)");
    add_cat(sub, true);
    sub->add_option("--modulus", copt.modulus, "coefficients mu_M for every pair (default per pair)");
    sub->add_option("--char", copt.char_p, "drop entries whose dimension the characteristic divides");
    sub->add_flag("--conjugation-dedup", copt.conjugation_dedup, "annotate G-conjugate (H, N) pairs");
    sub->add_option("--expect", expect, "compare with a closed-form family")->check(CLI::IsMember({"dihedral"}));
    sub->add_option("--jobs", jobs, "worker threads (default DWCAT_JOBS or 1)");
    sub->add_flag("--skip-verify", skip_verify, "do not build and check each representative");
    sub->callback([&] {
      action = [&] {
        copt.jobs = jobs ? *jobs : jobs_from_env();
        if (copt.jobs < 1) throw InputError("--jobs must be positive");
        if (copt.modulus && (*copt.modulus < 2 || *copt.modulus > io::kModulusGuard))
          throw InputError("modulus out of range");
        if (copt.char_p && !is_prime(*copt.char_p)) throw InputError("--char must be a prime");
        auto ctx = load_context(group_arg, cocycle_arg);
        if (copt.modulus && *copt.modulus % ctx.cocycle.omega.lcm_denominator() != 0)
          throw InputError("modulus must be a multiple of the cocycle denominators");
        if (expect) {
          if (!ctx.group.dihedral_m || !ctx.cocycle.dihedral_p)
            throw InputError("--expect dihedral needs a dihedral_odd group and a dihedral:p cocycle");
          copt.expect_dihedral = std::pair{*ctx.group.dihedral_m, *ctx.cocycle.dihedral_p};
        }
        copt.verify = !skip_verify;
        auto rep = classify(ctx.cat, copt);
        io::write_json(io::classification_json(rep, ctx.group, ctx.cocycle), out);
        if (rep.comparison && !rep.comparison->unflagged_ok) return kExpectation;
        return kOk;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::length_error& e) {
    std::cerr << "input too large: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kMath;
  }
}
