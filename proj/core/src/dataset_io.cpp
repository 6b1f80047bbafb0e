// JSON dataset loader. Every reference is resolved and every mathematical
// precondition checked here, so the verifier can assume a sound CaseStudy.
#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bundled_datasets.hpp"
#include "manin/case_study.hpp"
#include "manin/errors.hpp"

namespace manin {
namespace {

using json = nlohmann::json;

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

class Loader {
 public:
  explicit Loader(std::string origin) : origin_(std::move(origin)) {}

  CaseStudy load(const json& root) {
    expect_object(root, "");
    cs_.name = required_string(root, "name", "");
    cs_.title = optional_string(root, "title", "");
    cs_.notes = optional_string(root, "notes", "");
    if (root.contains("lattices")) load_lattices(member_object(root, "lattices", ""));
    if (root.contains("classes")) load_classes(member_object(root, "classes", ""));
    if (root.contains("pairings")) load_pairings(member_object(root, "pairings", ""));
    if (root.contains("cones")) load_cones(member_object(root, "cones", ""));
    if (root.contains("spaces")) load_spaces(member_object(root, "spaces", ""));
    if (root.contains("actions")) load_actions(member_object(root, "actions", ""));
    if (root.contains("hilbert")) load_hilbert(member_object(root, "hilbert", ""));
    if (root.contains("tables")) load_tables(member_object(root, "tables", ""));
    if (root.contains("expected")) load_expected(root.at("expected"), "expected");
    return std::move(cs_);
  }

 private:
  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw SchemaError(origin_ + ":" + (field.empty() ? "<root>" : field), what);
  }

  void expect_object(const json& j, const std::string& path) const {
    if (!j.is_object()) fail(path, "expected an object");
  }

  const json& member_object(const json& j, const std::string& key, const std::string& path) const {
    const json& m = j.at(key);
    expect_object(m, join(path, key));
    return m;
  }

  const json& required(const json& j, const std::string& key, const std::string& path) const {
    if (!j.contains(key)) fail(join(path, key), "missing required field");
    return j.at(key);
  }

  std::string required_string(const json& j, const std::string& key, const std::string& path) const {
    const json& v = required(j, key, path);
    if (!v.is_string()) fail(join(path, key), "expected a string");
    return v.get<std::string>();
  }

  std::string optional_string(const json& j, const std::string& key, const std::string& path) const {
    if (!j.contains(key)) return {};
    if (!j.at(key).is_string()) fail(join(path, key), "expected a string");
    return j.at(key).get<std::string>();
  }

  std::optional<bool> optional_bool(const json& j, const std::string& key, const std::string& path) const {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_boolean()) fail(join(path, key), "expected true or false");
    return j.at(key).get<bool>();
  }

  long integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
  }

  Rational rational(const json& j, const std::string& path) const {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }

  RatVec rational_array(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array of rationals");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational(j[i], index(path, i)));
    return RatVec(std::move(out));
  }

  const LatticeInfo& lattice(const std::string& name, const std::string& path) const {
    auto it = cs_.lattices.find(name);
    if (it == cs_.lattices.end()) fail(path, "unknown lattice '" + name + "'");
    return it->second;
  }

  // A class is either the name of a declared class or an inline coordinate
  // array; either way it must live in `lat`.
  RatVec class_ref(const json& j, const std::string& lat, const std::string& path) const {
    RatVec v;
    if (j.is_string()) {
      auto it = cs_.classes.find(j.get<std::string>());
      if (it == cs_.classes.end()) fail(path, "unknown class '" + j.get<std::string>() + "'");
      if (it->second.lattice != lat)
        fail(path, "class '" + it->first + "' lives in " + it->second.lattice + ", expected " + lat);
      v = it->second.coords;
    } else {
      v = rational_array(j, path);
    }
    if (v.dim() != lattice(lat, path).rank())
      fail(path, "dimension " + std::to_string(v.dim()) + " does not match rank of " + lat);
    return v;
  }

  void load_lattices(const json& obj) {
    for (const auto& [name, j] : obj.items()) {
      const std::string path = join("lattices", name);
      expect_object(j, path);
      LatticeInfo info;
      const json& basis = required(j, "basis", path);
      if (!basis.is_array() || basis.empty()) fail(join(path, "basis"), "expected a non-empty array of labels");
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis[i].is_string()) fail(index(join(path, "basis"), i), "expected a string");
        info.basis.push_back(basis[i].get<std::string>());
      }
      if (j.contains("rank") && integer(j.at("rank"), join(path, "rank")) != static_cast<long>(info.rank()))
        fail(join(path, "rank"), "does not match the number of basis labels");
      cs_.lattices.emplace(name, std::move(info));
    }
  }

  void load_classes(const json& obj) {
    for (const auto& [name, j] : obj.items()) {
      const std::string path = join("classes", name);
      expect_object(j, path);
      const std::string lat = required_string(j, "lattice", path);
      lattice(lat, join(path, "lattice"));
      const RatVec coords = rational_array(required(j, "coords", path), join(path, "coords"));
      if (coords.dim() != cs_.lattices.at(lat).rank()) fail(join(path, "coords"), "wrong number of coordinates");
      cs_.classes.emplace(name, NamedClass{lat, coords});
    }
  }

  void load_pairings(const json& obj) {
    for (const auto& [name, j] : obj.items()) {
      const std::string path = join("pairings", name);
      expect_object(j, path);
      const std::string left = required_string(j, "left", path);
      const std::string right = required_string(j, "right", path);
      const std::size_t rows = lattice(left, join(path, "left")).rank();
      const std::size_t cols = lattice(right, join(path, "right")).rank();
      const json& m = required(j, "matrix", path);
      const std::string mpath = join(path, "matrix");
      if (!m.is_array() || m.size() != rows) fail(mpath, "expected " + std::to_string(rows) + " rows");
      RatMatrix mat(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        const RatVec row = rational_array(m[r], index(mpath, r));
        if (row.dim() != cols) fail(index(mpath, r), "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) mat(r, c) = row[c];
      }
      PairingForm form(std::move(mat));
      if (!form.is_nondegenerate()) fail(mpath, "pairing is degenerate");
      const bool symmetric = optional_bool(j, "symmetric", path).value_or(false);
      if (symmetric && left != right) fail(join(path, "symmetric"), "only a self-pairing can be symmetric");
      cs_.pairings.emplace(name, NamedPairing{left, right, std::move(form), symmetric});
    }
  }

  void load_cones(const json& obj) {
    for (const auto& [name, j] : obj.items()) {
      const std::string path = join("cones", name);
      expect_object(j, path);
      const std::string lat = required_string(j, "lattice", path);
      const std::size_t rank = lattice(lat, join(path, "lattice")).rank();
      const std::string pairing = optional_string(j, "pairing", path);
      PairingForm form = PairingForm::identity(rank);
      if (!pairing.empty()) {
        auto it = cs_.pairings.find(pairing);
        if (it == cs_.pairings.end()) fail(join(path, "pairing"), "unknown pairing '" + pairing + "'");
        // Cones on the right side of a pairing see it transposed.
        if (it->second.left == lat)
          form = it->second.form;
        else if (it->second.right == lat)
          form = it->second.form.transposed();
        else
          fail(join(path, "pairing"), "pairing '" + pairing + "' does not involve lattice " + lat);
      }
      const json& gens = required(j, "generators", path);
      const std::string gpath = join(path, "generators");
      if (!gens.is_array() || gens.empty()) fail(gpath, "expected a non-empty array");
      std::vector<RatVec> listed;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        RatVec g = class_ref(gens[i], lat, index(gpath, i));
        if (g.is_zero()) fail(index(gpath, i), "zero generator");
        listed.push_back(std::move(g));
      }
      try {
        PolyCone cone = PolyCone::from_generators(listed, std::move(form));
        cs_.cones.emplace(name, NamedCone{lat, pairing, std::move(listed), std::move(cone)});
      } catch (const Error& e) {
        fail(gpath, e.what());
      }
    }
  }

  const NamedCone& cone(const json& j, const std::string& lat, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a cone name");
    auto it = cs_.cones.find(j.get<std::string>());
    if (it == cs_.cones.end()) fail(path, "unknown cone '" + j.get<std::string>() + "'");
    if (it->second.lattice != lat) fail(path, "cone lives in " + it->second.lattice + ", expected " + lat);
    return it->second;
  }

  void load_spaces(const json& obj) {
    for (const auto& [name, j] : obj.items()) {
      const std::string path = join("spaces", name);
      expect_object(j, path);
      const std::string lat = required_string(j, "lattice", path);
      const LatticeInfo& info = lattice(lat, join(path, "lattice"));
      const NamedCone& pseff = cone(required(j, "pseff", path), lat, join(path, "pseff"));
      if (!pseff.cone.is_full_dimensional()) fail(join(path, "pseff"), "pseudo-effective cone is not full-dimensional");
      std::optional<PolyCone> nef;
      if (j.contains("nef")) nef = cone(j.at("nef"), lat, join(path, "nef")).cone;
      const RatVec K = class_ref(required(j, "K", path), lat, join(path, "K"));
      const RatVec L = class_ref(required(j, "L", path), lat, join(path, "L"));
      std::optional<long> idx;
      if (j.contains("index")) idx = integer(j.at("index"), join(path, "index"));
      try {
        PolarizedSpace space(name, info.basis, pseff.cone, K, L, std::move(nef),
                             optional_bool(j, "adjoint_rigid", path));
        if (!space.polarization_is_big()) fail(join(path, "L"), "polarization is not big");
        cs_.spaces.emplace(name, NamedSpace{lat, idx, std::move(space)});
      } catch (const InputError& e) {
        if (dynamic_cast<const SchemaError*>(&e)) throw;
        fail(path, e.what());
      }
    }
  }

  IntMatrix int_matrix(const json& j, std::size_t rank, const std::string& path) const {
    if (!j.is_array() || j.size() != rank) fail(path, "expected a " + std::to_string(rank) + "x" +
                                                          std::to_string(rank) + " integer matrix");
    IntMatrix m(rank);
    for (std::size_t r = 0; r < rank; ++r) {
      if (!j[r].is_array() || j[r].size() != rank) fail(index(path, r), "wrong row length");
      for (std::size_t c = 0; c < rank; ++c) m(r, c) = integer(j[r][c], index(index(path, r), c));
    }
    return m;
  }

  void load_actions(const json& obj) {
    for (const auto& [name, j] : obj.items()) {
      const std::string path = join("actions", name);
      expect_object(j, path);
      const std::string space_name = required_string(j, "space", path);
      auto sit = cs_.spaces.find(space_name);
      if (sit == cs_.spaces.end()) fail(join(path, "space"), "unknown space '" + space_name + "'");
      const NamedSpace& ns = sit->second;
      GroupAction action;
      const json& gens = required(j, "generators", path);
      if (!gens.is_array()) fail(join(path, "generators"), "expected an array of matrices");
      for (std::size_t i = 0; i < gens.size(); ++i)
        action.generators.push_back(int_matrix(gens[i], ns.space.rank(), index(join(path, "generators"), i)));
      if (j.contains("rigid_components")) {
        const json& rc = j.at("rigid_components");
        const std::string rpath = join(path, "rigid_components");
        if (!rc.is_array()) fail(rpath, "expected an array of classes");
        for (std::size_t i = 0; i < rc.size(); ++i)
          action.rigid_components.push_back(class_ref(rc[i], ns.lattice, index(rpath, i)));
      }
      if (j.contains("closure_bound")) {
        const long bound = integer(j.at("closure_bound"), join(path, "closure_bound"));
        if (bound <= 0) fail(join(path, "closure_bound"), "must be positive");
        action.closure_bound = static_cast<std::size_t>(bound);
      }
      try {
        validate_action(ns.space, action);
      } catch (const Error& e) {
        fail(path, e.what());
      }
      cs_.actions.emplace(name, NamedAction{space_name, std::move(action)});
    }
  }

  void load_hilbert(const json& obj) {
    for (const auto& [name, j] : obj.items()) {
      const std::string path = join("hilbert", name);
      expect_object(j, path);
      HilbertSample s;
      const long n = integer(required(j, "n", path), join(path, "n"));
      if (n < 1) fail(join(path, "n"), "dimension must be positive");
      s.n = static_cast<int>(n);
      const RatVec values = rational_array(required(j, "values", path), join(path, "values"));
      if (values.dim() != static_cast<std::size_t>(n) + 1)
        fail(join(path, "values"), "expected n + 1 values P(1..n+1)");
      s.values.assign(values.begin(), values.end());
      cs_.hilbert.emplace(name, std::move(s));
    }
  }

  void load_tables(const json& obj) {
    for (const auto& [name, j] : obj.items()) {
      const std::string path = join("tables", name);
      expect_object(j, path);
      PrintedTable t;
      t.pairing = required_string(j, "pairing", path);
      auto pit = cs_.pairings.find(t.pairing);
      if (pit == cs_.pairings.end()) fail(join(path, "pairing"), "unknown pairing '" + t.pairing + "'");
      const json& cols = required(j, "columns", path);
      if (!cols.is_array() || cols.empty()) fail(join(path, "columns"), "expected a non-empty array");
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::string cpath = index(join(path, "columns"), i);
        if (!cols[i].is_string()) fail(cpath, "expected a class name");
        class_ref(cols[i], pit->second.left, cpath);
        t.columns.push_back(cols[i].get<std::string>());
      }
      const json& rows = required(j, "rows", path);
      if (!rows.is_array() || rows.empty()) fail(join(path, "rows"), "expected a non-empty array");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string rpath = index(join(path, "rows"), i);
        expect_object(rows[i], rpath);
        const json& cls = required(rows[i], "class", rpath);
        if (!cls.is_string()) fail(join(rpath, "class"), "expected a class name");
        class_ref(cls, pit->second.right, join(rpath, "class"));
        const RatVec values = rational_array(required(rows[i], "values", rpath), join(rpath, "values"));
        if (values.dim() != t.columns.size()) fail(join(rpath, "values"), "one value per column expected");
        t.rows.emplace_back(cls.get<std::string>(), std::vector<Rational>(values.begin(), values.end()));
      }
      cs_.tables.emplace(name, std::move(t));
    }
  }

  std::string expected_value(const json& v, const std::string& path) const {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    if (v.is_array()) {
      std::string out = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_rational(rational(v[i], index(path, i)));
      }
      return out + ")";
    }
    fail(path, "expected a string, integer, boolean or array of rationals");
  }

  void load_expected(const json& arr, const std::string& path) {
    if (!arr.is_array()) fail(path, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string epath = index(path, i);
      expect_object(arr[i], epath);
      Expectation e;
      e.quantity = required_string(arr[i], "quantity", epath);
      e.value = expected_value(required(arr[i], "value", epath), join(epath, "value"));
      e.citation = required_string(arr[i], "citation", epath);
      const std::string kind = e.quantity.substr(0, e.quantity.find(':'));
      const auto& kinds = quantity_kinds();
      if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
        fail(join(epath, "quantity"), "unknown quantity kind '" + kind + "'");
      cs_.expected.push_back(std::move(e));
    }
  }

  std::string origin_;
  CaseStudy cs_;
};

}  // namespace

std::vector<std::string> bundled_case_studies() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::bundled_dataset_texts()) names.emplace_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

CaseStudy parse_case_study(std::string_view json_text, std::string_view origin) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string(origin) + ":byte " + std::to_string(e.byte), "malformed JSON");
  }
  return Loader(std::string(origin)).load(root);
}

CaseStudy load_case_study(std::string_view name_or_path) {
  for (const auto& [name, text] : detail::bundled_dataset_texts())
    if (name == name_or_path) return parse_case_study(text, name);
  std::ifstream in{std::string(name_or_path)};
  if (!in) throw InputError("unknown dataset '" + std::string(name_or_path) + "' (not bundled, no such file)");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_case_study(buf.str(), name_or_path);
}

}  // namespace manin
