#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "manin/cone.hpp"
#include "manin/invariants.hpp"
#include "manin/pairing.hpp"
#include "manin/ratvec.hpp"

namespace manin {

struct LatticeInfo {
  std::vector<std::string> basis;
  std::size_t rank() const noexcept { return basis.size(); }
};

struct NamedClass {
  std::string lattice;
  RatVec coords;
};

struct NamedPairing {
  std::string left;
  std::string right;
  PairingForm form;
  // The dataset claims the table is symmetric; checked by table consistency.
  bool symmetric = false;
};

struct NamedCone {
  std::string lattice;
  std::string pairing;  // empty: identity pairing on `lattice`
  std::vector<RatVec> listed_generators;
  PolyCone cone;
};

struct NamedSpace {
  std::string lattice;
  std::optional<long> index;
  PolarizedSpace space;
};

struct NamedAction {
  std::string space;
  GroupAction action;
};

struct HilbertSample {
  int n = 0;
  std::vector<Rational> values;
};

// A printed intersection table: entry (row, column) = pair(column, row),
// columns are left-space classes and rows right-space classes.
struct PrintedTable {
  std::string pairing;
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::vector<Rational>>> rows;
};

struct Expectation {
  std::string quantity;
  std::string value;
  std::string citation;
};

// A worked example as machine-readable data plus the numbers it is expected
// to reproduce. Maps are ordered, so iteration (and every report) is
// deterministic.
struct CaseStudy {
  std::string name;
  std::string title;
  std::string notes;
  std::map<std::string, LatticeInfo> lattices;
  std::map<std::string, NamedClass> classes;
  std::map<std::string, NamedPairing> pairings;
  std::map<std::string, NamedCone> cones;
  std::map<std::string, NamedSpace> spaces;
  std::map<std::string, NamedAction> actions;
  std::map<std::string, HilbertSample> hilbert;
  std::map<std::string, PrintedTable> tables;
  std::vector<Expectation> expected;
};

// Names of the datasets compiled into the library, sorted.
std::vector<std::string> bundled_case_studies();

// Loads a bundled dataset by name, or a dataset file by path (anything that
// is not a bundled name). Every invariant is checked at load: references
// resolve, dimensions agree, cones are pointed, polarizations are big, actions
// preserve their spaces. Throws SchemaError naming the offending field.
CaseStudy load_case_study(std::string_view name_or_path);

// Same validation on JSON text; `origin` prefixes diagnostics.
CaseStudy parse_case_study(std::string_view json_text, std::string_view origin = "<memory>");

struct CheckResult {
  std::string quantity;
  std::string citation;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::vector<std::string> details;
};

struct TableStats {
  std::string table;
  std::size_t entries = 0;
  std::size_t matched = 0;
};

struct VerificationReport {
  std::string dataset;
  std::vector<CheckResult> checks;
  std::vector<TableStats> tables;

  std::size_t passed() const;
  bool all_pass() const { return passed() == checks.size(); }
};

// Recomputes every expected quantity and compares exactly; also runs
// check_table_consistency. Failures are report content, never exceptions
// (an expectation that cannot be evaluated fails with the reason in details).
VerificationReport verify_case_study(const CaseStudy& cs);

// For each printed table: solves every row for its coordinates from the
// printed values, compares with the row class, and re-derives every entry.
// Also checks symmetry of pairings marked symmetric.
VerificationReport check_table_consistency(const CaseStudy& cs);

// Quantity kinds understood by verify_case_study, e.g. "a", "b", "dual_equals".
const std::vector<std::string>& quantity_kinds();

}  // namespace manin
