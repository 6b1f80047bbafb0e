#include "manin_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "manin/case_study.hpp"
#include "manin/delpezzo.hpp"
#include "manin/errors.hpp"
#include "manin/fujita.hpp"

namespace manin::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::string dataset;
  std::string positional;
  std::string space;
  std::string other;
  std::string action;
  std::string cone;
  std::string with;
  std::string cls;
  std::string roots;
  std::string values;
  std::optional<long> n;
  std::optional<long> bound;
  std::optional<long> dim;
  std::string vol;
  std::string curve_deg;
  std::string rational_curve_deg;
  std::string surface_vol;
  std::string a;
  std::optional<long> d;
  std::optional<long> e;
};

struct Outcome {
  json doc;
  int code = kSuccess;
};

using Handler = std::function<Outcome(const Options&)>;

// ---------------------------------------------------------------- helpers

std::string rat(const Rational& q) { return format_rational(q); }

json vec_json(const RatVec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rat(x));
  return arr;
}

json vecs_json(const std::vector<RatVec>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(vec_json(v));
  return arr;
}

json matrix_json(const IntMatrix& m) {
  json arr = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c));
    arr.push_back(row);
  }
  return arr;
}

Rational arg_rational(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string("missing required flag --") + flag);
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    throw InputError(std::string("--") + flag + ": " + e.what());
  }
}

std::optional<Rational> opt_rational(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  return arg_rational(text, flag);
}

long need(const std::optional<long>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required flag --") + flag);
  return *v;
}

const std::string& need(const std::string& v, const char* flag) {
  if (v.empty()) throw InputError(std::string("missing required flag --") + flag);
  return v;
}

// "1,0,-1" or "(1,0,-1)".
RatVec parse_tuple(std::string text, const char* flag) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<Rational> out;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(arg_rational(text.substr(start, comma - start), flag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RatVec(std::move(out));
}

std::vector<RatVec> parse_tuples(const std::string& text, const char* flag) {
  std::vector<RatVec> out;
  std::string::size_type start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    out.push_back(parse_tuple(text.substr(start, semi - start), flag));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

CaseStudy dataset_of(const Options& o) {
  if (!o.dataset.empty()) return load_case_study(o.dataset);
  if (!o.positional.empty()) return load_case_study(o.positional);
  throw InputError("missing dataset: pass a bundled name or --dataset <path>");
}

template <class Map>
const auto& pick(const Map& map, const std::string& key, const char* what) {
  auto it = map.find(key);
  if (it == map.end()) {
    std::string known;
    for (const auto& [k, v] : map) known += (known.empty() ? "" : ", ") + k;
    throw InputError(std::string("unknown ") + what + " '" + key + "' (known: " + known + ")");
  }
  return it->second;
}

// Picks a space: by --space inside --dataset, or --space names a dataset and
// --n selects the space carrying that index.
std::pair<CaseStudy, std::string> resolve_space(const Options& o) {
  if (!o.dataset.empty()) {
    CaseStudy cs = load_case_study(o.dataset);
    if (!o.space.empty()) {
      pick(cs.spaces, o.space, "space");
      return {std::move(cs), o.space};
    }
    if (!o.n) throw InputError("pass --space <name> or --n <index>");
    for (const auto& [name, s] : cs.spaces)
      if (s.index == o.n) return {cs, name};
    throw InputError("no space with index " + std::to_string(*o.n));
  }
  CaseStudy cs = load_case_study(need(o.space, "space"));
  if (o.n) {
    for (const auto& [name, s] : cs.spaces)
      if (s.index == o.n) return {cs, name};
    throw InputError("dataset " + cs.name + " has no space with index " + std::to_string(*o.n));
  }
  if (cs.spaces.size() != 1) throw InputError("dataset " + cs.name + " has several spaces; pass --n or --dataset/--space");
  return {cs, cs.spaces.begin()->first};
}

RatVec resolve_class(const CaseStudy& cs, const std::string& text) {
  if (auto it = cs.classes.find(text); it != cs.classes.end()) return it->second.coords;
  return parse_tuple(text, "class");
}

std::string ordering(std::strong_ordering o) { return o < 0 ? "less" : o > 0 ? "greater" : "equal"; }

json comparison_json(const GeneratorComparison& c) {
  json j;
  j["equal"] = c.equal;
  json missing = json::array(), extra = json::array();
  for (const auto& w : c.missing) missing.push_back({{"ray", vec_json(w.ray)}, {"witness", vec_json(w.witness)}});
  for (const auto& w : c.extra) extra.push_back({{"ray", vec_json(w.ray)}, {"witness", vec_json(w.witness)}});
  j["listed_not_extreme"] = missing;
  j["unlisted_rays"] = extra;
  return j;
}

json report_json(const VerificationReport& r) {
  json j;
  j["dataset"] = r.dataset;
  j["passed"] = r.passed();
  j["total"] = r.checks.size();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["quantity"] = c.quantity;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["expected"] = c.expected;
    cj["computed"] = c.computed;
    cj["citation"] = c.citation;
    cj["details"] = c.details;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  json tables = json::array();
  for (const auto& t : r.tables) tables.push_back({{"table", t.table}, {"entries", t.entries}, {"matched", t.matched}});
  j["tables"] = tables;
  return j;
}

// ---------------------------------------------------------------- invariants

Outcome inv_compute(const Options& o) {
  auto [cs, name] = resolve_space(o);
  const NamedSpace& s = cs.spaces.at(name);
  json j;
  j["dataset"] = cs.name;
  j["space"] = name;
  j["basis"] = s.space.basis_labels();
  j["a"] = rat(a_invariant(s.space));
  j["b"] = b_invariant(s.space);
  const RatVec adjoint = adjoint_class(s.space);
  j["adjoint_class"] = vec_json(adjoint);
  j["tight_facets"] = vecs_json(minimal_supported_face(s.space.pseff(), adjoint).tight_facets);
  return {j};
}

Outcome inv_equivariant(const Options& o) {
  const CaseStudy cs = dataset_of(o);
  NamedAction act = pick(cs.actions, need(o.action, "action"), "action");
  if (o.bound) {
    if (*o.bound <= 0) throw InputError("--bound must be positive");
    act.action.closure_bound = static_cast<std::size_t>(*o.bound);
  }
  const PolarizedSpace& sp = cs.spaces.at(act.space).space;
  validate_action(sp, act.action);
  json j;
  j["dataset"] = cs.name;
  j["action"] = o.action;
  j["space"] = act.space;
  j["group_order"] = enumerate_group(act.action, sp.rank()).size();
  j["fixed_subspace"] = vecs_json(fixed_subspace(act.action, sp.rank()));
  j["rigid_components"] = vecs_json(act.action.rigid_components);
  j["a"] = rat(a_invariant(sp));
  j["b_equivariant"] = b_equivariant(sp, act.action);
  return {j};
}

Outcome inv_compare(const Options& o) {
  const CaseStudy cs = dataset_of(o);
  const ABResult x = compute_ab(pick(cs.spaces, need(o.space, "space"), "space").space);
  const ABResult y = compute_ab(pick(cs.spaces, need(o.other, "other"), "space").space);
  json j;
  j["dataset"] = cs.name;
  j["space"] = {{"name", o.space}, {"a", rat(x.a)}, {"b", x.b}};
  j["other"] = {{"name", o.other}, {"a", rat(y.a)}, {"b", y.b}};
  j["order"] = ordering(compare_lex(x, y));
  return {j};
}

Outcome inv_verdict(const Options& o) {
  const CaseStudy cs = dataset_of(o);
  const ABResult base = compute_ab(pick(cs.spaces, need(o.space, "space"), "space").space);
  const PolarizedSpace& other = pick(cs.spaces, need(o.other, "other"), "space").space;
  json j;
  j["dataset"] = cs.name;
  j["base"] = {{"name", o.space}, {"a", rat(base.a)}, {"b", base.b}};
  if (!other.polarization_is_big()) {
    j["other"] = {{"name", o.other}};
    j["verdict"] = to_string(balanced_verdict(base, base, false));
    return {j};
  }
  const ABResult y = compute_ab(other);
  j["other"] = {{"name", o.other}, {"a", rat(y.a)}, {"b", y.b}};
  j["verdict"] = to_string(balanced_verdict(base, y, true));
  return {j};
}

// ---------------------------------------------------------------- cone

Outcome cone_dual(const Options& o) {
  const CaseStudy cs = dataset_of(o);
  const NamedCone& c = pick(cs.cones, need(o.cone, "cone"), "cone");
  const PolyCone rebuilt = PolyCone::from_generators(c.listed_generators, c.cone.pairing());
  const PolyCone dual = dual_cone(rebuilt);
  json j;
  j["dataset"] = cs.name;
  j["cone"] = o.cone;
  j["extreme_rays"] = vecs_json(rebuilt.generators());
  j["facets"] = vecs_json(rebuilt.facets());
  j["dual_rays"] = vecs_json(dual.generators());
  return {j};
}

Outcome cone_compare(const Options& o) {
  const CaseStudy cs = dataset_of(o);
  const NamedCone& c = pick(cs.cones, need(o.cone, "cone"), "cone");
  const NamedCone& w = pick(cs.cones, need(o.with, "with"), "cone");
  const PolyCone dual = dual_cone(c.cone);
  if (dual.ambient_dim() != w.cone.ambient_dim()) throw InputError("--with cone has the wrong dimension");
  json j;
  j["dataset"] = cs.name;
  j["dual_of"] = o.cone;
  j["listed"] = o.with;
  j["comparison"] = comparison_json(compare_generators(dual, w.listed_generators));
  json outside = json::array();
  for (const auto& v : dual_violations(c.cone, w.listed_generators))
    outside.push_back({{"ray", vec_json(v.ray)}, {"witness", vec_json(v.witness)}});
  j["listed_outside_dual"] = outside;
  return {j, j["comparison"]["equal"].get<bool>() ? kSuccess : kVerificationFailed};
}

Outcome cone_contains(const Options& o) {
  const CaseStudy cs = dataset_of(o);
  const PolyCone& c = pick(cs.cones, need(o.cone, "cone"), "cone").cone;
  const RatVec x = resolve_class(cs, need(o.cls, "class"));
  if (x.dim() != c.ambient_dim()) throw InputError("--class has the wrong dimension");
  json j;
  j["cone"] = o.cone;
  j["class"] = vec_json(x);
  j["contains"] = contains(c, x);
  j["interior"] = c.contains_in_interior(x);
  j["extreme_ray"] = c.is_extreme_ray(x);
  return {j};
}

Outcome cone_face(const Options& o) {
  const CaseStudy cs = dataset_of(o);
  const PolyCone& c = pick(cs.cones, need(o.cone, "cone"), "cone").cone;
  const RatVec x = resolve_class(cs, need(o.cls, "class"));
  if (x.dim() != c.ambient_dim()) throw InputError("--class has the wrong dimension");
  const SupportedFace f = minimal_supported_face(c, x);
  json j;
  j["cone"] = o.cone;
  j["class"] = vec_json(x);
  j["codim"] = f.codim;
  j["face_rays"] = vecs_json(f.face.generators());
  j["tight_facets"] = vecs_json(f.tight_facets);
  return {j};
}

// ---------------------------------------------------------------- fujita

GeometricWitness witness_of(const Options& o) {
  GeometricWitness w;
  w.dim = static_cast<int>(need(o.dim, "dim"));
  w.vol_L = arg_rational(o.vol, "vol");
  w.min_curve_deg = opt_rational(o.curve_deg, "curve-deg");
  w.min_rational_curve_deg = opt_rational(o.rational_curve_deg, "rational-curve-deg");
  w.min_surface_vol = opt_rational(o.surface_vol, "surface-vol");
  return w;
}

json verdict_json(const Verdict& v) { return {{"status", to_string(v.status)}, {"rule", v.cited_rule}}; }

Outcome fj_bigness(const Options& o) { return {verdict_json(bigness_criterion(witness_of(o)))}; }

Outcome fj_improved(const Options& o) {
  Options copy = o;
  if (!copy.dim) copy.dim = 3;
  return {verdict_json(bigness_dim3_improved(witness_of(copy)))};
}

Outcome fj_surface(const Options& o) {
  return {verdict_json(surface_rational_curve_criterion(arg_rational(o.rational_curve_deg, "rational-curve-deg")))};
}

Outcome fj_rigid(const Options& o) {
  const auto s = rigid_surface_volume_check(arg_rational(o.a, "a"), arg_rational(o.vol, "vol"));
  return {{{"status", to_string(s)}}};
}

Outcome fj_cover_a(const Options& o) {
  const CoverABound r = surface_cover_a_bound(need(o.d, "d"), need(o.e, "e"));
  return {{{"bound_sq", rat(r.bound_sq)}, {"strongly_a_unbalanced_excluded", r.strongly_a_unbalanced_excluded}}};
}

Outcome fj_cover_b(const Options& o) {
  const CoverBBound r = weak_dp_cover_b_bound(need(o.d, "d"), need(o.e, "e"));
  json j{{"feasible", r.feasible}};
  if (r.feasible) j["b_upper"] = r.b_upper;
  j["balanced_forced"] = r.balanced_forced;
  return {j};
}

Outcome fj_hilbert(const Options& o) {
  const RatVec v = parse_tuple(need(o.values, "values"), "values");
  const HilbertCheck h = adjoint_hilbert_check(static_cast<int>(need(o.n, "n")), {v.begin(), v.end()});
  json coeffs = json::array();
  for (const auto& c : h.coefficients) coeffs.push_back(rat(c));
  return {{{"coefficients", coeffs},
           {"top_intersection", rat(h.top_intersection)},
           {"matches_projective", h.matches_projective},
           {"matches_quadric", h.matches_quadric}}};
}

// ---------------------------------------------------------------- delpezzo

DPLattice lattice_of(const Options& o) {
  long n = 0;
  if (o.n) {
    n = *o.n;
  } else {
    if (o.positional.empty()) throw InputError("missing del Pezzo index n");
    const Rational q = arg_rational(o.positional, "n");
    if (!is_integer(q)) throw InputError("n must be an integer");
    n = q.get_num().get_si();
  }
  if (n < 0 || n > 8) throw InputError("n must lie in 0..8");
  return DPLattice(static_cast<int>(n));
}

Outcome dp_enumerate(const Options& o, bool roots) {
  const DPLattice lat = lattice_of(o);
  const auto found = roots ? enumerate_minus_two(lat, o.bound) : enumerate_minus_one(lat, o.bound);
  json j;
  j["n"] = lat.n();
  j["basis"] = lat.basis_labels();
  j["count"] = found.size();
  json classes = json::array();
  for (const auto& c : found) classes.push_back(vec_json(c.cls));
  j["classes"] = classes;
  return {j};
}

Outcome dp_classify(const Options& o) {
  const DPLattice lat = lattice_of(o);
  const RatVec x = parse_tuple(need(o.cls, "class"), "class");
  const CurveClass c = classify(lat, x);
  return {{{"class", vec_json(c.cls)},
           {"kind", to_string(c.kind)},
           {"self_intersection", rat(lat.intersect(x, x))},
           {"canonical_degree", rat(lat.intersect(x, lat.canonical()))}}};
}

Outcome dp_blow_down(const Options& o) {
  const DPLattice lat = lattice_of(o);
  const CurveClass c = classify(lat, parse_tuple(need(o.cls, "class"), "class"));
  const IntMatrix m = exceptional_basis_change(lat, c);
  const DPLattice down = blow_down(lat, c);
  return {{{"class", vec_json(c.cls)},
           {"basis_change", matrix_json(m)},
           {"image", vec_json(m * c.cls)},
           {"contracted_n", down.n()},
           {"contracted_degree", down.degree()}}};
}

Outcome dp_rank_drop(const Options& o) {
  const DPLattice lat = lattice_of(o);
  std::vector<CurveClass> roots;
  for (const auto& r : parse_tuples(need(o.roots, "roots"), "roots")) roots.push_back(classify(lat, r));
  return {{{"n", lat.n()}, {"rank_drop", crepant_rank_drop(lat, roots)}}};
}

Outcome dp_reflections(const Options& o) {
  const DPLattice lat = lattice_of(o);
  json j;
  j["n"] = lat.n();
  if (!o.cls.empty()) {
    j["reflection"] = matrix_json(reflection(lat, parse_tuple(o.cls, "class")));
    return {j};
  }
  json gens = json::array();
  for (const auto& m : simple_reflections(lat)) gens.push_back(matrix_json(m));
  j["simple_reflections"] = gens;
  return {j};
}

// ---------------------------------------------------------------- casestudy

Outcome cs_list(const Options&) {
  json arr = json::array();
  for (const auto& name : bundled_case_studies()) {
    const CaseStudy cs = load_case_study(name);
    arr.push_back({{"name", name}, {"title", cs.title}, {"expected", cs.expected.size()}});
  }
  return {{{"datasets", arr}}};
}

Outcome cs_verify(const Options& o) {
  const VerificationReport r = verify_case_study(dataset_of(o));
  return {report_json(r), r.all_pass() ? kSuccess : kVerificationFailed};
}

Outcome cs_tables(const Options& o) {
  const VerificationReport r = check_table_consistency(dataset_of(o));
  return {report_json(r), r.all_pass() ? kSuccess : kVerificationFailed};
}

Outcome cs_show(const Options& o) {
  const CaseStudy cs = dataset_of(o);
  json j;
  j["name"] = cs.name;
  j["title"] = cs.title;
  j["notes"] = cs.notes;
  json lattices;
  for (const auto& [k, v] : cs.lattices) lattices[k] = v.basis;
  j["lattices"] = lattices;
  json cones;
  for (const auto& [k, v] : cs.cones)
    cones[k] = {{"lattice", v.lattice}, {"dimension", v.cone.dimension()}, {"extreme_rays", v.cone.generators().size()},
                {"facets", v.cone.facets().size()}};
  j["cones"] = cones;
  json spaces;
  for (const auto& [k, v] : cs.spaces)
    spaces[k] = {{"lattice", v.lattice}, {"K", vec_json(v.space.canonical())}, {"L", vec_json(v.space.polarization())}};
  j["spaces"] = spaces;
  json actions;
  for (const auto& [k, v] : cs.actions) actions[k] = {{"space", v.space}, {"generators", v.action.generators.size()}};
  j["actions"] = actions;
  json expected = json::array();
  for (const auto& e : cs.expected) expected.push_back({{"quantity", e.quantity}, {"value", e.value}, {"citation", e.citation}});
  j["expected"] = expected;
  return {j};
}

// ---------------------------------------------------------------- table

struct Entry {
  CommandInfo info;
  Handler handler;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"invariants", "compute", "a, b and adjoint class of a space",
        {"a_invariant", "b_invariant", "adjoint_class", "minimal_supported_face"}},
       inv_compute},
      {{"invariants", "equivariant", "b-invariant of a twist under a group action",
        {"b_equivariant", "enumerate_group", "validate_action", "fixed_subspace"}},
       inv_equivariant},
      {{"invariants", "compare", "lexicographic comparison of two (a, b) pairs", {"compute_ab", "compare_lex"}}, inv_compare},
      {{"invariants", "verdict", "balanced verdict of a subvariety or cover", {"balanced_verdict"}}, inv_verdict},
      {{"cone", "dual", "extreme rays, facets and dual of a cone", {"from_generators", "dual_cone"}}, cone_dual},
      {{"cone", "compare", "compare a dual cone with a listed generator set",
        {"compare_generators", "dual_violations"}},
       cone_compare},
      {{"cone", "contains", "membership, interior and extremality of a class", {"contains", "is_extreme_ray"}},
       cone_contains},
      {{"cone", "face", "minimal supported face of a boundary class", {"minimal_supported_face"}}, cone_face},
      {{"fujita", "bigness", "bigness criterion in dimension 1, 2 or 3", {"bigness_criterion"}}, fj_bigness},
      {{"fujita", "improved", "improved threefold criterion", {"bigness_dim3_improved"}}, fj_improved},
      {{"fujita", "surface", "rational-curve criterion on surfaces", {"surface_rational_curve_criterion"}},
       fj_surface},
      {{"fujita", "rigid", "volume bound for adjoint rigid surfaces", {"rigid_surface_volume_check"}}, fj_rigid},
      {{"fujita", "cover-a", "a-bound for surface covers", {"surface_cover_a_bound"}}, fj_cover_a},
      {{"fujita", "cover-b", "b-bound for weak del Pezzo covers", {"weak_dp_cover_b_bound"}}, fj_cover_b},
      {{"fujita", "hilbert", "adjoint Hilbert polynomial check", {"adjoint_hilbert_check"}}, fj_hilbert},
      {{"delpezzo", "minus-one", "enumerate (-1)-classes", {"enumerate_minus_one", "default_enumeration_bound"}},
       [](const Options& o) { return dp_enumerate(o, false); }},
      {{"delpezzo", "roots", "enumerate roots", {"enumerate_minus_two", "default_enumeration_bound"}},
       [](const Options& o) { return dp_enumerate(o, true); }},
      {{"delpezzo", "classify", "classify a lattice class", {"classify"}}, dp_classify},
      {{"delpezzo", "blow-down", "contract a (-1)-class", {"exceptional_basis_change", "blow_down"}}, dp_blow_down},
      {{"delpezzo", "rank-drop", "Picard rank drop of a crepant contraction", {"crepant_rank_drop"}}, dp_rank_drop},
      {{"delpezzo", "reflections", "Weyl group reflections", {"simple_reflections", "reflection"}}, dp_reflections},
      {{"casestudy", "list", "list bundled datasets", {"bundled_case_studies", "load_case_study"}}, cs_list},
      {{"casestudy", "verify", "recompute every expected quantity",
        {"verify_case_study", "load_case_study", "parse_case_study"}},
       cs_verify},
      {{"casestudy", "tables", "printed table consistency", {"check_table_consistency"}}, cs_tables},
      {{"casestudy", "show", "summarize a dataset", {"load_case_study"}}, cs_show},
  };
  return table;
}

// ---------------------------------------------------------------- rendering

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + scalar_text(v[i]);
    return out + ")";
  }
  return v.dump();
}

bool is_flat(const json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_object() && !x.is_array(); });
}

void render_text(const json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, val] : v.items()) {
    if (is_flat(val)) {
      out << pad << key << ": " << scalar_text(val) << "\n";
    } else if (val.is_array()) {
      out << pad << key << ":" << (val.empty() ? " none" : "") << "\n";
      for (const auto& item : val) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render_text(item, out, indent + 4);
        } else {
          out << pad << "  " << scalar_text(item) << "\n";
        }
      }
    } else {
      out << pad << key << ":\n";
      render_text(val, out, indent + 2);
    }
  }
}

void render_report_text(const json& r, std::ostream& out) {
  out << "dataset " << r["dataset"].get<std::string>() << ": " << r["passed"].get<std::size_t>() << "/"
      << r["total"].get<std::size_t>() << " checks pass\n";
  for (const auto& c : r["checks"]) {
    const bool pass = c["status"] == "pass";
    out << (pass ? "PASS " : "FAIL ") << c["quantity"].get<std::string>() << " = " << c["computed"].get<std::string>();
    if (!pass) out << " (expected " << c["expected"].get<std::string>() << ")";
    if (!c["citation"].get<std::string>().empty()) out << "  [" << c["citation"].get<std::string>() << "]";
    out << "\n";
    if (!pass)
      for (const auto& d : c["details"]) out << "    " << d.get<std::string>() << "\n";
  }
  for (const auto& t : r["tables"])
    out << "table " << t["table"].get<std::string>() << ": " << t["matched"].get<std::size_t>() << "/"
        << t["entries"].get<std::size_t>() << " entries match\n";
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> infos = [] {
    std::vector<CommandInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fujita invariants, cone duality and worked examples", "manin"};
  app.require_subcommand(1);
  Options o;

  std::map<std::string, CLI::App*> groups;
  const Entry* chosen = nullptr;
  std::vector<std::pair<CLI::App*, const Entry*>> leaves;
  for (const auto& e : entries()) {
    auto& group = groups[e.info.command];
    if (!group) {
      static const std::map<std::string, std::string> summaries{
          {"invariants", "a and b invariants, equivariant b, balanced verdicts"},
          {"cone", "cone duality, comparison, membership and faces"},
          {"fujita", "Fujita-type bigness criteria, cover bounds, Hilbert checks"},
          {"delpezzo", "del Pezzo lattices: (-1)-classes, roots, blow-downs"},
          {"casestudy", "bundled worked examples and their verification"},
      };
      group = app.add_subcommand(e.info.command, summaries.at(e.info.command));
      group->require_subcommand(1);
    }
    CLI::App* sub = group->add_subcommand(e.info.subaction, e.info.summary);
    sub->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--dataset", o.dataset, "bundled dataset name or path to a dataset file");
    sub->add_option("--bound", o.bound, "enumeration bound or group-closure bound");
    if (e.info.command == "casestudy" || e.info.command == "delpezzo")
      sub->add_option("target", o.positional, "dataset name, path, or del Pezzo index");
    if (e.info.command == "invariants") {
      sub->add_option("--space", o.space, "space name (or dataset name with --n)");
      sub->add_option("--other", o.other, "second space");
      sub->add_option("--action", o.action, "group action name");
    }
    if (e.info.command == "invariants" || e.info.command == "fujita" || e.info.command == "delpezzo")
      sub->add_option("--n", o.n, "space index, dimension, or del Pezzo index");
    if (e.info.command == "cone") {
      sub->add_option("--cone", o.cone, "cone name");
      sub->add_option("--with", o.with, "cone holding the listed generators");
    }
    if (e.info.command == "cone" || e.info.command == "delpezzo")
      sub->add_option("--class", o.cls, "class name or coordinates \"a,b,c\"");
    if (e.info.command == "delpezzo") sub->add_option("--roots", o.roots, "roots \"r1;r2;...\"");
    if (e.info.command == "fujita") {
      sub->add_option("--dim", o.dim, "dimension of the subvariety");
      sub->add_option("--vol", o.vol, "volume of L");
      sub->add_option("--curve-deg", o.curve_deg, "minimal L-degree of curves");
      sub->add_option("--rational-curve-deg", o.rational_curve_deg, "minimal L-degree of rational curves");
      sub->add_option("--surface-vol", o.surface_vol, "minimal L^2 on surfaces");
      sub->add_option("--a", o.a, "a-invariant");
      sub->add_option("--d", o.d, "degree of the surface");
      sub->add_option("--e", o.e, "degree of the cover");
      sub->add_option("--values", o.values, "P(1),...,P(n+1)");
    }
    leaves.emplace_back(sub, &e);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  for (const auto& [sub, e] : leaves)
    if (sub->parsed()) chosen = e;
  if (!chosen) {
    err << "no subcommand given\n";
    return kInputError;
  }

  try {
    const Outcome r = chosen->handler(o);
    if (o.format == "structured") {
      out << r.doc.dump(2) << "\n";
    } else if (r.doc.contains("checks")) {
      render_report_text(r.doc, out);
    } else {
      render_text(r.doc, out, 0);
    }
    return r.code;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace manin::cli
