#include "dwcat/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

namespace dwcat::io {

namespace {

// exact counts; decimal strings once they leave the uint64 range
json count_json(const Count& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
  return c.str();
}

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

std::int64_t get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int get_index(const json& j, int bound, const char* what) {
  std::int64_t v = get_int(j, what);
  if (v < 0 || v >= bound) fail(std::string(what) + " out of range: " + std::to_string(v));
  return static_cast<int>(v);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

int parse_small_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    fail(std::string("bad ") + what + ": " + s);
  }
}

Phase phase_from_pair(const json& num, const json& den) {
  std::int64_t d = get_int(den, "denominator");
  if (d <= 0) fail("denominator must be positive");
  return Phase(get_int(num, "numerator"), d);
}

}  // namespace

json read_json(const std::string& arg) {
  try {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) fail("cannot open " + arg);
    return json::parse(in);
  } catch (const json::exception& e) {
    fail("malformed JSON in " + (arg.size() > 40 ? arg.substr(0, 40) + "..." : arg) + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) fail("cannot write " + path);
  out << j.dump(2) << '\n';
}

GroupSpec parse_group(const json& j) {
  if (!j.is_object()) fail("group spec must be an object");
  GroupSpec g;
  g.spec = j;
  if (j.contains("preset")) {
    const json& p = j.at("preset");
    if (!p.is_string()) fail("preset must be a string");
    const std::string name = p.get<std::string>();
    if (name == "cyclic") {
      std::int64_t n = get_int(field(j, "n"), "n");
      if (n < 1 || n > kGroupOrderGuard) fail("cyclic order out of range");
      g.G = make_cyclic(static_cast<int>(n));
    } else if (name == "dihedral_odd") {
      std::int64_t m = get_int(field(j, "m"), "m");
      if (m < 1 || 2 * (2 * m + 1) > kGroupOrderGuard) fail("dihedral parameter out of range");
      g.G = make_dihedral_odd(static_cast<int>(m));
      g.dihedral_m = static_cast<int>(m);
    } else if (name == "product") {
      const json& fs = field(j, "factors");
      if (!fs.is_array() || fs.empty()) fail("product needs a nonempty factor list");
      std::vector<GroupPtr> factors;
      std::int64_t order = 1;
      for (const auto& f : fs) {
        factors.push_back(parse_group(f).G);
        order *= factors.back()->order();
        if (order > kGroupOrderGuard) fail("product group too large");
      }
      g.G = make_direct_product(factors);
    } else {
      fail("unknown group preset " + name);
    }
    return g;
  }
  const json& t = field(j, "table");
  if (!t.is_array() || t.empty()) fail("group table must be a nonempty array");
  if (t.size() > static_cast<std::size_t>(kGroupOrderGuard)) fail("group table too large");
  const int n = static_cast<int>(t.size());
  std::vector<std::vector<int>> table;
  for (const auto& row : t) {
    if (!row.is_array()) fail("group table rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(get_index(x, n, "group table entry"));
    table.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  try {
    g.G = std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return g;
}

GroupSpec load_group(const std::string& arg) {
  if (starts_with(arg, "cyclic:")) return parse_group({{"preset", "cyclic"}, {"n", parse_small_int(arg.substr(7), "order")}});
  if (starts_with(arg, "dihedral_odd:"))
    return parse_group({{"preset", "dihedral_odd"}, {"m", parse_small_int(arg.substr(13), "m")}});
  return parse_group(read_json(arg));
}

json group_summary(const GroupSpec& g, std::optional<std::int64_t> cohomology_modulus) {
  const FiniteGroup& G = *g.G;
  json j;
  j["spec"] = g.spec;
  j["order"] = G.order();
  j["abelian"] = G.is_abelian();
  j["labels"] = G.labels();
  std::vector<int> orders;
  for (int a = 0; a < G.order(); ++a) orders.push_back(G.element_order(a));
  j["element_orders"] = orders;
  j["center"] = G.center();
  json subs = json::array();
  std::size_t normal = 0;
  for (const auto& H : enumerate_subgroups(g.G)) {
    json s{{"elements", H.elements()}, {"order", H.order()}, {"index", H.index()}, {"normal", H.is_normal()}};
    if (g.dihedral_m) {
      auto [c, x] = dihedral_shape(*g.dihedral_m, H.elements());
      s["name"] = std::string(1, c) + std::to_string(x);
    }
    normal += H.is_normal();
    subs.push_back(std::move(s));
  }
  j["subgroups"] = std::move(subs);
  j["normal_subgroups"] = normal;
  if (cohomology_modulus) {
    json c{{"modulus", *cohomology_modulus}};
    for (int n = 1; n <= 3; ++n) {
      auto H = cohomology_group(g.G, n, *cohomology_modulus);
      c["H" + std::to_string(n)] = {{"invariant_factors", H.invariant_factors}, {"order", H.order()}};
    }
    j["cohomology"] = std::move(c);
  }
  return j;
}

json phase_json(const Phase& p) { return p.str(); }

Phase phase_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Phase::parse(j.get<std::string>());
    } catch (const std::exception&) {
      fail("bad phase " + j.get<std::string>());
    }
  }
  if (j.is_array() && j.size() == 2) return phase_from_pair(j[0], j[1]);
  fail("phase must be \"num/den\"");
}

json cyclo_json(const CycloSum& c) {
  if (auto m = c.as_monomial()) return phase_json(*m);
  if (auto n = c.as_integer()) return *n;
  json out = json::array();
  for (const auto& [p, k] : c.terms()) out.push_back({phase_json(p), k});
  return out;
}

CycloSum cyclo_from_json(const json& j) {
  if (j.is_string()) return CycloSum(phase_from_json(j));
  if (j.is_number_integer()) return CycloSum(j.get<std::int64_t>());
  if (!j.is_array()) fail("coefficient must be a phase or a list of [phase, multiplicity]");
  CycloSum c;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) fail("coefficient term must be [phase, multiplicity]");
    c.add_term(phase_from_json(t[0]), get_int(t[1], "multiplicity"));
  }
  return c;
}

Cochain parse_cochain(const json& j, const GroupPtr& G) {
  std::int64_t arity = get_int(field(j, "arity"), "arity");
  if (arity < 0 || arity > 4) fail("cochain arity must lie in [0, 4]");
  const int n = G->order();
  Cochain c(G, static_cast<int>(arity));
  const json& entries = field(j, "entries");
  if (!entries.is_array()) fail("entries must be an array");
  std::set<std::size_t> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != static_cast<std::size_t>(arity) + 2)
      fail("cochain entry must be [i1..i" + std::to_string(arity) + ", num, den]");
    std::vector<int> args;
    for (std::int64_t a = 0; a < arity; ++a) args.push_back(get_index(e[static_cast<std::size_t>(a)], n, "group index"));
    std::size_t idx = c.index(args.data());
    if (!seen.insert(idx).second) fail("duplicate cochain entry");
    c.value(idx) = phase_from_pair(e[static_cast<std::size_t>(arity)], e[static_cast<std::size_t>(arity) + 1]);
  }
  return c;
}

json cochain_json(const Cochain& c, const json& group_spec) {
  const int n = c.group()->order(), a = c.arity();
  json entries = json::array();
  std::vector<int> t(static_cast<std::size_t>(a), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::size_t r = i;
    for (int k = a; k-- > 0;) {
      t[static_cast<std::size_t>(k)] = static_cast<int>(r % static_cast<std::size_t>(n));
      r /= static_cast<std::size_t>(n);
    }
    Phase v = c.value(i);
    if (v.is_zero()) continue;
    json e(t);
    e.push_back(v.num());
    e.push_back(v.den());
    entries.push_back(std::move(e));
  }
  return {{"group", group_spec}, {"arity", a}, {"entries", std::move(entries)}};
}

GroupSpec cocycle_group(const std::string& arg) {
  if (arg == "trivial" || starts_with(arg, "dihedral:")) fail("cocycle shorthand " + arg + " needs --group");
  return parse_group(field(read_json(arg), "group"));
}

CocycleSpec load_cocycle(const std::string& arg, const std::optional<GroupSpec>& g, bool validate) {
  if (arg == "trivial") {
    if (!g) fail("trivial cocycle needs a group");
    return {Cochain(g->G, 3), "trivial", {}};
  }
  if (starts_with(arg, "dihedral:")) {
    if (!g || !g->dihedral_m) fail("dihedral:p needs a dihedral_odd group");
    int m = *g->dihedral_m;
    int p = parse_small_int(arg.substr(9), "p");
    if (p < 0 || p > 4 * m + 1) fail("p must lie in [0, " + std::to_string(4 * m + 1) + "]");
    return {dihedral_omega_p(g->G, m, p), arg, p};
  }
  json j = read_json(arg);
  GroupPtr G;
  if (j.is_object() && j.contains("group")) {
    GroupSpec own = parse_group(j.at("group"));
    if (g && g->G->table() != own.G->table()) fail("cocycle file lives on a different group");
    G = g ? g->G : own.G;
  } else {
    if (!g) fail("cocycle file names no group");
    G = g->G;
  }
  Cochain c = parse_cochain(j, G);
  if (c.arity() != 3) fail("associator must have arity 3");
  if (validate) {
    if (!c.is_normalized()) fail("3-cocycle is not normalized");
    if (auto v = cocycle_violation(c)) {
      std::string t;
      for (int x : *v) t += (t.empty() ? "" : ",") + std::to_string(x);
      fail("not a 3-cocycle; violated at (" + t + ")");
    }
  }
  return {std::move(c), std::move(j), {}};
}

Subgroup parse_subgroup(const std::string& arg, const GroupPtr& G) {
  std::vector<int> elems;
  std::string s = arg;
  if (s == "all") {
    for (int a = 0; a < G->order(); ++a) elems.push_back(a);
  } else {
    std::replace(s.begin(), s.end(), ',', ' ');
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']'; }), s.end());
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
      int v = parse_small_int(tok, "subgroup element");
      if (v < 0 || v >= G->order()) fail("subgroup element out of range: " + tok);
      elems.push_back(v);
    }
  }
  try {
    return Subgroup(G, elems);
  } catch (const std::invalid_argument& e) {
    fail(std::string("not a subgroup: ") + e.what());
  }
}

MonomialYDModule parse_module(const json& j, const CategoryPtr& cat) {
  const int n = cat->G().order();
  const json& deg = field(j, "degree");
  if (!deg.is_array() || deg.empty()) fail("degree must be a nonempty array");
  const std::size_t dim = deg.size();
  std::vector<int> degree;
  for (const auto& d : deg) degree.push_back(get_index(d, n, "degree"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != dim) fail("label count does not match dimension");
  }
  const json& act = field(j, "action");
  if (!act.is_array()) fail("action must be an array");
  std::vector<MonomialAction> table(static_cast<std::size_t>(n) * dim, {-1, Phase()});
  const int bound = static_cast<int>(dim);
  for (const auto& e : act) {
    if (!e.is_array() || e.size() != 5) fail("action entry must be [g, b, b', num, den]");
    int g = get_index(e[0], n, "group element");
    int b = get_index(e[1], bound, "basis index");
    int t = get_index(e[2], bound, "basis index");
    auto& slot = table[static_cast<std::size_t>(g) * dim + static_cast<std::size_t>(b)];
    if (slot.target >= 0) fail("duplicate action entry for (" + std::to_string(g) + ", " + std::to_string(b) + ")");
    slot = {t, phase_from_pair(e[3], e[4])};
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i].target < 0)
      fail("missing action entry for (" + std::to_string(i / dim) + ", " + std::to_string(i % dim) + ")");
  return MonomialYDModule(cat, std::move(degree), std::move(table), std::move(labels));
}

json module_json(const MonomialYDModule& V) {
  const int n = V.category()->G().order();
  json act = json::array();
  for (int g = 0; g < n; ++g)
    for (std::size_t b = 0; b < V.dim(); ++b) {
      const auto& e = V.act(g, b);
      act.push_back({g, b, e.target, e.phase.num(), e.phase.den()});
    }
  return {{"labels", V.labels()}, {"degree", V.degrees()}, {"action", std::move(act)}};
}

json map_json(const LinearMap& f) {
  json out = json::array();
  for (std::size_t s = 0; s < f.src_dim(); ++s)
    for (const auto& [t, c] : f.column(s)) out.push_back({s, t, cyclo_json(c)});
  return out;
}

LinearMap map_from_json(const json& j, std::size_t src, std::size_t tgt) {
  if (!j.is_array()) fail("map must be an array of [src, tgt, coeff]");
  LinearMap f(src, tgt);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) fail("map entry must be [src, tgt, coeff]");
    std::int64_t s = get_int(e[0], "source index"), t = get_int(e[1], "target index");
    if (s < 0 || static_cast<std::size_t>(s) >= src || t < 0 || static_cast<std::size_t>(t) >= tgt)
      fail("map index out of range");
    f.add(static_cast<std::size_t>(s), static_cast<std::size_t>(t), cyclo_from_json(e[2]));
  }
  return f;
}

json algebra_json(const CenterAlgebra& A) {
  json j = module_json(A.obj);
  j["mult"] = map_json(A.mult);
  j["unit"] = map_json(A.unit);
  if (A.has_coalgebra()) {
    j["comult"] = map_json(A.comult);
    j["counit"] = map_json(A.counit);
  }
  return j;
}

CenterAlgebra parse_algebra(const json& j, const CategoryPtr& cat) {
  CenterAlgebra A{parse_module(j, cat), {}, {}, {}, {}};
  const std::size_t d = A.dim();
  A.mult = map_from_json(field(j, "mult"), d * d, d);
  A.unit = map_from_json(field(j, "unit"), 1, d);
  if (j.contains("comult") != j.contains("counit")) fail("comult and counit come together");
  if (j.contains("comult")) {
    A.comult = map_from_json(j.at("comult"), d, d * d);
    A.counit = map_from_json(j.at("counit"), d, 1);
  }
  return A;
}

json algebra_module_json(const AlgebraModule& M) {
  json j = module_json(M.obj);
  j["algebra"] = algebra_json(M.alg);
  j["rho"] = map_json(M.rho);
  return j;
}

AlgebraModule parse_algebra_module(const json& j, const CategoryPtr& cat) {
  AlgebraModule M{parse_module(j, cat), parse_algebra(field(j, "algebra"), cat), {}};
  M.rho = map_from_json(field(j, "rho"), M.obj.dim() * M.alg.dim(), M.obj.dim());
  return M;
}

json total_cochain_json(const TotalCochain2& x) {
  const std::size_t k = x.nsize(), nh = static_cast<std::size_t>(x.H->order());
  json kap = json::array(), eps = json::array();
  for (std::size_t i = 0; i < k; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < k; ++j) row.push_back(phase_json(x.k(i, j)));
    kap.push_back(std::move(row));
  }
  for (std::size_t h = 0; h < nh; ++h) {
    json row = json::array();
    for (std::size_t j = 0; j < k; ++j) row.push_back(phase_json(x.epsilon(static_cast<int>(h), j)));
    eps.push_back(std::move(row));
  }
  return {{"kappa", std::move(kap)}, {"epsilon", std::move(eps)}};
}

TotalCochain2 parse_total_cochain(const json& j, const GroupPtr& H, const std::vector<int>& N) {
  TotalCochain2 x(H, N);
  const std::size_t k = N.size(), nh = static_cast<std::size_t>(H->order());
  const json& kap = field(j, "kappa");
  const json& eps = field(j, "epsilon");
  if (!kap.is_array() || kap.size() != k) fail("kappa must be a |N| x |N| table");
  if (!eps.is_array() || eps.size() != nh) fail("epsilon must be a |H| x |N| table");
  for (std::size_t i = 0; i < k; ++i) {
    if (!kap[i].is_array() || kap[i].size() != k) fail("kappa must be a |N| x |N| table");
    for (std::size_t m = 0; m < k; ++m) x.kappa[i * k + m] = phase_from_json(kap[i][m]);
  }
  for (std::size_t h = 0; h < nh; ++h) {
    if (!eps[h].is_array() || eps[h].size() != k) fail("epsilon must be a |H| x |N| table");
    for (std::size_t m = 0; m < k; ++m) x.eps[h * k + m] = phase_from_json(eps[h][m]);
  }
  if (!x.is_normalized()) fail("kappa and epsilon must vanish on identity arguments");
  return x;
}

json property_json(const PropertyReport& p) {
  json j{{"module_valid", p.module_valid},
         {"associative", p.associative},
         {"unital", p.unital},
         {"commutative", p.commutative},
         {"coassociative", p.coassociative},
         {"counital", p.counital},
         {"frobenius", p.frobenius},
         {"morphisms", p.morphisms},
         {"separable", p.separable},
         {"special", p.special},
         {"etale", p.etale},
         {"rigid", p.rigid},
         {"twist_trivial", p.twist_trivial},
         {"rigid_consistent", p.rigid_consistent},
         {"connected", p.connected},
         {"beta1", cyclo_json(p.beta_1)},
         {"qdim", cyclo_json(p.qdim)},
         {"failures", p.failures}};
  j["betaA"] = p.beta_A ? cyclo_json(*p.beta_A) : json(nullptr);
  return j;
}

json identities_json(const std::vector<IdentityResult>& r) {
  json out = json::array();
  for (const auto& x : r)
    out.push_back({{"name", x.name}, {"checked", x.checked}, {"violations", x.violations}, {"examples", x.examples}});
  return out;
}

json classification_json(const ClassificationReport& rep, const GroupSpec& g, const CocycleSpec& c) {
  json j;
  j["group"] = g.spec;
  j["cocycle"] = c.source;
  j["modulus"] = rep.modulus_override ? json(*rep.modulus_override) : json(nullptr);
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json x{{"H", e.H}, {"N", e.N}, {"qdim", e.qdim}, {"betaA", e.beta_A}, {"beta1", e.beta_1},
           {"qdim_primes", e.qdim_primes}};
    json data = total_cochain_json(e.data);
    x["kappa"] = data["kappa"];
    x["epsilon"] = data["epsilon"];
    json checks{{"verified", e.verified}, {"cross_path", e.cross_path}, {"local_over_A1", e.local_over_A1}};
    if (e.verified || !e.props.failures.empty() || e.props.module_valid) checks["properties"] = property_json(e.props);
    x["checks"] = std::move(checks);
    x["conjugate_of"] = e.conjugate_of ? json(*e.conjugate_of) : json(nullptr);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  json pairs = json::array();
  for (const auto& p : rep.pairs) {
    json x{{"H", p.H},
           {"N", p.N},
           {"H_name", p.H_name},
           {"N_name", p.N_name},
           {"modulus", p.modulus},
           {"solvable", p.solvable},
           {"classes", p.classes},
           {"solutions", count_json(p.solutions)},
           {"coboundaries", count_json(p.image)},
           {"exact_division", p.exact_division},
           {"escalation_stable", p.escalation_stable},
           {"distinct", p.distinct},
           {"first_entry", p.first_entry},
           {"emitted", p.emitted}};
    x["escalated_classes"] = p.escalated_classes ? json(*p.escalated_classes) : json(nullptr);
    pairs.push_back(std::move(x));
  }
  json counts{{"pairs", rep.pairs.size()}, {"entries", rep.entries.size()}, {"per_pair", std::move(pairs)}};
  if (std::any_of(rep.entries.begin(), rep.entries.end(), [](const auto& e) { return e.conjugate_of.has_value(); }) ||
      rep.conjugation_classes > 0)
    counts["up_to_conjugation"] = rep.conjugation_classes;
  j["counts"] = std::move(counts);
  if (rep.comparison) {
    const auto& cmp = *rep.comparison;
    json rows = json::array();
    for (const auto& r : cmp.rows)
      rows.push_back({{"H", r.H},
                      {"N", r.N},
                      {"H_name", r.H_name},
                      {"N_name", r.N_name},
                      {"expected", r.expected},
                      {"actual", r.actual},
                      {"match", r.match},
                      {"flagged", r.flagged},
                      {"note", r.note}});
    j["expected_comparison"] = {{"family", "dihedral"},   {"m", cmp.m},
                                {"p", cmp.p},             {"rows", std::move(rows)},
                                {"cyclic_match", cmp.cyclic_match}, {"unflagged_ok", cmp.unflagged_ok}};
  }
  return j;
}

}  // namespace dwcat::io
