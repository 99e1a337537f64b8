#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dwcat/classification.hpp"
#include "dwcat/local_modules.hpp"

namespace dwcat::io {

using nlohmann::json;

// malformed or inconsistent input; the CLI maps it to exit code 2
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// file path, inline JSON text, or throws InputError
json read_json(const std::string& arg);
void write_json(const json& j, const std::string& path);  // "-" or empty for stdout

inline constexpr int kGroupOrderGuard = 256;
inline constexpr std::int64_t kModulusGuard = std::int64_t(1) << 40;

struct GroupSpec {
  GroupPtr G;
  json spec;
  std::optional<int> dihedral_m;  // set for the dihedral_odd preset
};
GroupSpec parse_group(const json& j);
// JSON (path or inline), or the shorthands cyclic:n and dihedral_odd:m
GroupSpec load_group(const std::string& arg);
json group_summary(const GroupSpec& g, std::optional<std::int64_t> cohomology_modulus);

json phase_json(const Phase& p);
Phase phase_from_json(const json& j);
// "n/d" for a single root of unity, an integer, otherwise [["n/d", k], ...]
json cyclo_json(const CycloSum& c);
CycloSum cyclo_from_json(const json& j);

struct CocycleSpec {
  Cochain omega;
  json source;                     // "dihedral:p", "trivial", or the cocycle file
  std::optional<int> dihedral_p;
};
// {"group", "arity", "entries": [[i1..in, num, den], ...]}; omitted entries are 0
Cochain parse_cochain(const json& j, const GroupPtr& G);
json cochain_json(const Cochain& c, const json& group_spec);
// arg is dihedral:p, trivial, or a cocycle file. A group embedded in the file
// must agree with g when g is given. With validate, normalization and the
// cocycle condition are enforced.
CocycleSpec load_cocycle(const std::string& arg, const std::optional<GroupSpec>& g, bool validate);
// the group a cocycle file carries
GroupSpec cocycle_group(const std::string& arg);

// comma separated element indices, checked to be a subgroup
Subgroup parse_subgroup(const std::string& arg, const GroupPtr& G);

// {"labels", "degree", "action": [[g, b, b', num, den], ...]}; every (g, b) exactly once
MonomialYDModule parse_module(const json& j, const CategoryPtr& cat);
json module_json(const MonomialYDModule& V);

// [[src, tgt, coeff], ...]
json map_json(const LinearMap& f);
LinearMap map_from_json(const json& j, std::size_t src, std::size_t tgt);

// module spec plus "mult", "unit", "comult", "counit"
json algebra_json(const CenterAlgebra& A);
CenterAlgebra parse_algebra(const json& j, const CategoryPtr& cat);

// module spec plus "algebra" (dump of the acting algebra) and "rho"
json algebra_module_json(const AlgebraModule& M);
AlgebraModule parse_algebra_module(const json& j, const CategoryPtr& cat);

// {"kappa": |N| x |N|, "epsilon": |H| x |N|}, rows of epsilon by local H index
json total_cochain_json(const TotalCochain2& x);
TotalCochain2 parse_total_cochain(const json& j, const GroupPtr& H, const std::vector<int>& N);

json property_json(const PropertyReport& p);
json identities_json(const std::vector<IdentityResult>& r);
json classification_json(const ClassificationReport& rep, const GroupSpec& g, const CocycleSpec& c);

}  // namespace dwcat::io
