#include <algorithm>
#include <functional>
#include <sstream>

#include "manin/case_study.hpp"
#include "manin/delpezzo.hpp"
#include "manin/errors.hpp"
#include "manin/fujita.hpp"

namespace manin {
namespace {

using Args = std::vector<std::string>;

struct Computed {
  std::string value;
  std::vector<std::string> details;
};

std::vector<std::string> split(const std::string& id) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto colon = id.find(':', start);
    parts.push_back(id.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  return parts;
}

template <class Map>
const auto& lookup(const Map& map, const std::string& key, const char* what) {
  auto it = map.find(key);
  if (it == map.end()) throw InputError(std::string("unknown ") + what + " '" + key + "'");
  return it->second;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string ab_str(const ABResult& r) { return "(" + format_rational(r.a) + "," + std::to_string(r.b) + ")"; }

std::string ordering_str(std::strong_ordering o) {
  if (o < 0) return "less";
  if (o > 0) return "greater";
  return "equal";
}

std::string witness_line(const char* label, const RayWitness& w) {
  return std::string(label) + " " + w.ray.to_string() + " witness " + w.witness.to_string();
}

const NamedClass& cls(const CaseStudy& cs, const std::string& name) { return lookup(cs.classes, name, "class"); }

// The dual of `cone` and the cone it is compared with must share a lattice.
void require_dual_lattice(const CaseStudy& cs, const NamedCone& cone, const NamedCone& other) {
  if (cone.pairing.empty()) {
    if (other.lattice != cone.lattice) throw InputError("dual cone lattice mismatch");
    return;
  }
  const NamedPairing& p = lookup(cs.pairings, cone.pairing, "pairing");
  const std::string& dual_lattice = p.left == cone.lattice ? p.right : p.left;
  if (other.lattice != dual_lattice)
    throw InputError("cone lives in " + other.lattice + " but the dual lives in " + dual_lattice);
}

// Normalizers turn an expected string into canonical form; a value that does
// not parse is left as-is and will simply fail to match.
std::string norm_rational(const std::string& s) { return format_rational(parse_rational(s)); }
std::string norm_integer(const std::string& s) {
  const Rational q = parse_rational(s);
  if (!is_integer(q)) throw InputError("expected an integer, got " + s);
  return q.get_num().get_str();
}
std::string norm_word(const std::string& s) { return s; }
std::string norm_tuple(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw InputError("expected a tuple (x,y,...), got " + s);
  std::string out = "(";
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string item;
  bool first = true;
  while (std::getline(in, item, ',')) {
    if (!first) out += ",";
    out += norm_rational(item);
    first = false;
  }
  return out + ")";
}

struct Kind {
  const char* name;
  std::size_t arity;
  std::string (*normalize)(const std::string&);
  std::function<Computed(const CaseStudy&, const Args&)> eval;
};

Computed eval_dual_equals(const CaseStudy& cs, const Args& a) {
  const NamedCone& c = lookup(cs.cones, a[0], "cone");
  const NamedCone& d = lookup(cs.cones, a[1], "cone");
  require_dual_lattice(cs, c, d);
  const PolyCone dual = dual_cone(c.cone);
  const GeneratorComparison cmp = compare_generators(dual, d.listed_generators);
  Computed out{bool_str(cmp.equal), {}};
  for (const auto& g : dual.generators()) out.details.push_back("dual ray " + g.to_string());
  for (const auto& w : cmp.missing) out.details.push_back(witness_line("listed but not extreme in the dual:", w));
  for (const auto& w : cmp.extra) out.details.push_back(witness_line("dual ray not listed:", w));
  return out;
}

Computed eval_dual_contains(const CaseStudy& cs, const Args& a) {
  const NamedCone& c = lookup(cs.cones, a[0], "cone");
  const NamedCone& d = lookup(cs.cones, a[1], "cone");
  require_dual_lattice(cs, c, d);
  const auto bad = dual_violations(c.cone, d.listed_generators);
  Computed out{bool_str(bad.empty()), {}};
  out.details.push_back(std::to_string(d.listed_generators.size() - bad.size()) + "/" +
                        std::to_string(d.listed_generators.size()) + " listed generators lie in the dual");
  for (const auto& w : bad) out.details.push_back(witness_line("outside the dual:", w));
  // The full comparison is reported alongside, mismatches named by witness.
  const GeneratorComparison cmp = compare_generators(dual_cone(c.cone), d.listed_generators);
  out.details.push_back(std::string("generator sets ") + (cmp.equal ? "equal" : "differ"));
  for (const auto& w : cmp.missing) out.details.push_back(witness_line("listed but not extreme in the dual:", w));
  for (const auto& w : cmp.extra) out.details.push_back(witness_line("dual ray not listed:", w));
  return out;
}

Computed eval_dual_within(const CaseStudy& cs, const Args& a) {
  const NamedCone& c = lookup(cs.cones, a[0], "cone");
  const NamedCone& d = lookup(cs.cones, a[1], "cone");
  require_dual_lattice(cs, c, d);
  const PolyCone dual = dual_cone(c.cone);
  Computed out{"true", {}};
  for (const auto& g : dual.generators()) {
    if (d.cone.contains(g)) continue;
    out.value = "false";
    out.details.push_back("dual ray " + g.to_string() + " lies outside " + a[1]);
  }
  return out;
}

ABResult ab_of(const CaseStudy& cs, const std::string& space) {
  return compute_ab(lookup(cs.spaces, space, "space").space);
}

std::size_t minus_count(const std::string& arg, bool roots) {
  const Rational n = parse_rational(arg);
  if (!is_integer(n) || n < 0 || n > 8) throw InputError("del Pezzo index must be an integer in 0..8");
  const DPLattice lat(static_cast<int>(n.get_num().get_si()));
  return roots ? enumerate_minus_two(lat).size() : enumerate_minus_one(lat).size();
}

const std::vector<Kind>& kinds() {
  static const std::vector<Kind> table = {
      {"a", 1, norm_rational,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{format_rational(a_invariant(lookup(cs.spaces, a[0], "space").space)), {}};
       }},
      {"b", 1, norm_integer,
       [](const CaseStudy& cs, const Args& a) {
         const ABResult r = ab_of(cs, a[0]);
         Computed out{std::to_string(r.b), {}};
         out.details.push_back("adjoint class " + r.adjoint_class.to_string());
         for (const auto& f : r.tight_facets) out.details.push_back("tight facet " + f.to_string());
         return out;
       }},
      {"ab", 1, norm_tuple, [](const CaseStudy& cs, const Args& a) { return Computed{ab_str(ab_of(cs, a[0])), {}}; }},
      {"adjoint", 1, norm_tuple,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{adjoint_class(lookup(cs.spaces, a[0], "space").space).to_string(), {}};
       }},
      {"big", 1, norm_word,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{bool_str(lookup(cs.spaces, a[0], "space").space.polarization_is_big()), {}};
       }},
      {"b_equivariant", 1, norm_integer,
       [](const CaseStudy& cs, const Args& a) {
         const NamedAction& act = lookup(cs.actions, a[0], "action");
         const PolarizedSpace& sp = lookup(cs.spaces, act.space, "space").space;
         return Computed{std::to_string(b_equivariant(sp, act.action)), {}};
       }},
      {"fixed_rank", 1, norm_integer,
       [](const CaseStudy& cs, const Args& a) {
         const NamedAction& act = lookup(cs.actions, a[0], "action");
         const std::size_t rank = lookup(cs.spaces, act.space, "space").space.rank();
         Computed out{std::to_string(fixed_subspace(act.action, rank).size()), {}};
         for (const auto& v : fixed_subspace(act.action, rank)) out.details.push_back("fixed " + v.to_string());
         return out;
       }},
      {"group_order", 1, norm_integer,
       [](const CaseStudy& cs, const Args& a) {
         const NamedAction& act = lookup(cs.actions, a[0], "action");
         const std::size_t rank = lookup(cs.spaces, act.space, "space").space.rank();
         return Computed{std::to_string(enumerate_group(act.action, rank).size()), {}};
       }},
      {"lex", 2, norm_word,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{ordering_str(compare_lex(ab_of(cs, a[0]), ab_of(cs, a[1]))), {}};
       }},
      {"verdict", 2, norm_word,
       [](const CaseStudy& cs, const Args& a) {
         const ABResult base = ab_of(cs, a[0]);
         const PolarizedSpace& other = lookup(cs.spaces, a[1], "space").space;
         if (!other.polarization_is_big())
           return Computed{to_string(balanced_verdict(base, base, false)), {"pullback is not big"}};
         const ABResult r = compute_ab(other);
         return Computed{to_string(balanced_verdict(base, r, true)),
                         {"base " + ab_str(base), "other " + ab_str(r)}};
       }},
      {"verdict_equivariant", 2, norm_word,
       [](const CaseStudy& cs, const Args& a) {
         const ABResult base = ab_of(cs, a[0]);
         const NamedAction& act = lookup(cs.actions, a[1], "action");
         const PolarizedSpace& sp = lookup(cs.spaces, act.space, "space").space;
         ABResult twisted;
         twisted.a = a_invariant(sp);
         twisted.b = b_equivariant(sp, act.action);
         return Computed{to_string(balanced_verdict(base, twisted, sp.polarization_is_big())),
                         {"base " + ab_str(base), "twist " + ab_str(twisted)}};
       }},
      {"dual_equals", 2, norm_word, eval_dual_equals},
      {"dual_contains", 2, norm_word, eval_dual_contains},
      {"dual_within", 2, norm_word, eval_dual_within},
      {"extreme_count", 1, norm_integer,
       [](const CaseStudy& cs, const Args& a) {
         const PolyCone& c = lookup(cs.cones, a[0], "cone").cone;
         Computed out{std::to_string(c.generators().size()), {}};
         for (const auto& g : c.generators()) out.details.push_back("extreme ray " + g.to_string());
         return out;
       }},
      {"facet_count", 1, norm_integer,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{std::to_string(lookup(cs.cones, a[0], "cone").cone.facets().size()), {}};
       }},
      {"dimension", 1, norm_integer,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{std::to_string(lookup(cs.cones, a[0], "cone").cone.dimension()), {}};
       }},
      {"is_extreme", 2, norm_word,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{bool_str(lookup(cs.cones, a[0], "cone").cone.is_extreme_ray(cls(cs, a[1]).coords)), {}};
       }},
      {"contains", 2, norm_word,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{bool_str(lookup(cs.cones, a[0], "cone").cone.contains(cls(cs, a[1]).coords)), {}};
       }},
      {"face_codim", 2, norm_integer,
       [](const CaseStudy& cs, const Args& a) {
         const auto face = minimal_supported_face(lookup(cs.cones, a[0], "cone").cone, cls(cs, a[1]).coords);
         return Computed{std::to_string(face.codim), {}};
       }},
      {"symmetric", 1, norm_word,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{bool_str(lookup(cs.pairings, a[0], "pairing").form.is_symmetric()), {}};
       }},
      {"pair", 3, norm_rational,
       [](const CaseStudy& cs, const Args& a) {
         const NamedPairing& p = lookup(cs.pairings, a[0], "pairing");
         const NamedClass& x = cls(cs, a[1]);
         const NamedClass& y = cls(cs, a[2]);
         if (x.lattice != p.left || y.lattice != p.right) throw InputError("classes do not match the pairing sides");
         return Computed{format_rational(p.form.pair(x.coords, y.coords)), {}};
       }},
      {"rank", 1, norm_integer,
       [](const CaseStudy& cs, const Args& a) {
         return Computed{std::to_string(lookup(cs.lattices, a[0], "lattice").rank()), {}};
       }},
      {"minus_one_count", 1, norm_integer,
       [](const CaseStudy&, const Args& a) { return Computed{std::to_string(minus_count(a[0], false)), {}}; }},
      {"root_count", 1, norm_integer,
       [](const CaseStudy&, const Args& a) { return Computed{std::to_string(minus_count(a[0], true)), {}}; }},
      {"hilbert_top", 1, norm_rational,
       [](const CaseStudy& cs, const Args& a) {
         const HilbertSample& s = lookup(cs.hilbert, a[0], "hilbert sample");
         return Computed{format_rational(adjoint_hilbert_check(s.n, s.values).top_intersection), {}};
       }},
      {"hilbert_pattern", 1, norm_word,
       [](const CaseStudy& cs, const Args& a) {
         const HilbertSample& s = lookup(cs.hilbert, a[0], "hilbert sample");
         const HilbertCheck h = adjoint_hilbert_check(s.n, s.values);
         return Computed{h.matches_projective ? "projective" : h.matches_quadric ? "quadric" : "none", {}};
       }},
      {"table", 1, norm_word,
       [](const CaseStudy& cs, const Args& a) {
         lookup(cs.tables, a[0], "table");
         const VerificationReport r = check_table_consistency(cs);
         Computed out{"true", {}};
         const std::string prefix = "table:" + a[0] + ":";
         for (const auto& c : r.checks) {
           if (c.quantity.rfind(prefix, 0) != 0) continue;
           if (!c.pass) out.value = "false";
           out.details.push_back(c.quantity + " " + (c.pass ? "pass" : "FAIL") + " " + c.computed);
         }
         return out;
       }},
  };
  return table;
}

CheckResult run_expectation(const CaseStudy& cs, const Expectation& e) {
  CheckResult res{e.quantity, e.citation, e.value, "", false, {}};
  const std::vector<std::string> parts = split(e.quantity);
  const auto& table = kinds();
  auto it = std::find_if(table.begin(), table.end(), [&](const Kind& k) { return parts[0] == k.name; });
  try {
    if (it == table.end()) throw InputError("unknown quantity kind '" + parts[0] + "'");
    if (parts.size() != it->arity + 1)
      throw InputError("quantity '" + parts[0] + "' takes " + std::to_string(it->arity) + " argument(s)");
    res.expected = it->normalize(e.value);
    Computed c = it->eval(cs, Args(parts.begin() + 1, parts.end()));
    res.computed = std::move(c.value);
    res.details = std::move(c.details);
    res.pass = res.computed == res.expected;
  } catch (const Error& ex) {
    res.computed = "error";
    res.details.push_back(ex.what());
  }
  return res;
}

}  // namespace

const std::vector<std::string>& quantity_kinds() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& k : kinds()) out.emplace_back(k.name);
    return out;
  }();
  return names;
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

VerificationReport check_table_consistency(const CaseStudy& cs) {
  VerificationReport report;
  report.dataset = cs.name;
  for (const auto& [tname, t] : cs.tables) {
    const NamedPairing& p = cs.pairings.at(t.pairing);
    const std::string prefix = "table:" + tname + ":";
    // Column d contributes the functional y -> d . (M y) on the row space.
    std::vector<RatVec> functionals;
    for (const auto& col : t.columns) functionals.push_back(p.form.matrix().transposed() * cs.classes.at(col).coords);
    const RatMatrix system = RatMatrix::from_rows(functionals, p.form.right_dim());

    TableStats stats{tname, 0, 0};
    std::vector<std::string> mismatches;
    for (const auto& [row, printed] : t.rows) {
      const RatVec& coords = cs.classes.at(row).coords;
      CheckResult solved{prefix + "row:" + row, "", coords.to_string(), "", false, {}};
      if (auto y = system.solve(RatVec(printed))) {
        solved.computed = y->to_string();
        solved.pass = *y == coords;
      } else {
        solved.computed = "unsolvable";
        solved.details.push_back("printed row is inconsistent or does not determine the coordinates");
      }
      report.checks.push_back(std::move(solved));

      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        ++stats.entries;
        const Rational derived = dot(functionals[c], coords);
        if (derived == printed[c]) {
          ++stats.matched;
        } else {
          mismatches.push_back("entry (" + row + "," + t.columns[c] + ") printed " + format_rational(printed[c]) +
                               " derived " + format_rational(derived));
        }
      }
    }
    const std::string total = std::to_string(stats.entries);
    report.checks.push_back(CheckResult{prefix + "entries", "", total + " of " + total,
                                        std::to_string(stats.matched) + " of " + total, stats.matched == stats.entries,
                                        std::move(mismatches)});
    report.tables.push_back(stats);
  }
  for (const auto& [pname, p] : cs.pairings) {
    if (!p.symmetric) continue;
    CheckResult sym{"symmetric:" + pname, "", "true", bool_str(p.form.is_symmetric()), false, {}};
    sym.pass = sym.computed == sym.expected;
    const RatMatrix& m = p.form.matrix();
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = r + 1; c < m.cols(); ++c)
        if (m(r, c) != m(c, r))
          sym.details.push_back("entry (" + std::to_string(r) + "," + std::to_string(c) + ") differs from its transpose");
    report.checks.push_back(std::move(sym));
  }
  return report;
}

VerificationReport verify_case_study(const CaseStudy& cs) {
  VerificationReport report;
  report.dataset = cs.name;
  for (const auto& e : cs.expected) report.checks.push_back(run_expectation(cs, e));
  VerificationReport tables = check_table_consistency(cs);
  for (auto& c : tables.checks) report.checks.push_back(std::move(c));
  report.tables = std::move(tables.tables);
  return report;
}

}  // namespace manin
