#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "manin/cone.hpp"
#include "manin/int_matrix.hpp"
#include "manin/ratvec.hpp"

namespace manin {

// Numerical model of a polarized variety: Neron-Severi space of rank
// `rank()`, pseudo-effective cone, canonical class K and polarization L.
// `adjoint_rigid` is asserted data (Iitaka dimension of aL + K is zero),
// never computed.
class PolarizedSpace {
 public:
  // Checks dimensions, label count and nef ⊆ pseff. Bigness of L is checked
  // by the invariant computations (and by validate()).
  PolarizedSpace(std::string name, std::vector<std::string> basis_labels, PolyCone pseff, RatVec canonical,
                 RatVec polarization, std::optional<PolyCone> nef = std::nullopt,
                 std::optional<bool> adjoint_rigid = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return pseff_.ambient_dim(); }
  const std::vector<std::string>& basis_labels() const noexcept { return basis_labels_; }
  const PolyCone& pseff() const noexcept { return pseff_; }
  const RatVec& canonical() const noexcept { return canonical_; }
  const RatVec& polarization() const noexcept { return polarization_; }
  const std::optional<PolyCone>& nef() const noexcept { return nef_; }
  std::optional<bool> adjoint_rigid() const noexcept { return adjoint_rigid_; }

  bool polarization_is_big() const { return pseff_.contains_in_interior(polarization_); }
  // Throws PreconditionError("polarization not big") unless L is interior.
  void validate() const;

  // Same space with L replaced.
  PolarizedSpace with_polarization(RatVec polarization) const;

 private:
  std::string name_;
  std::vector<std::string> basis_labels_;
  PolyCone pseff_;
  RatVec canonical_;
  RatVec polarization_;
  std::optional<PolyCone> nef_;
  std::optional<bool> adjoint_rigid_;
};

struct ABResult {
  Rational a;
  std::size_t b = 0;
  RatVec adjoint_class;
  std::vector<RatVec> tight_facets;
};

// min { t : t L + K in pseff } = max over facets f of -(K.f)/(L.f).
Rational a_invariant(const PolarizedSpace& space);
// a L + K.
RatVec adjoint_class(const PolarizedSpace& space);
// Codimension of the minimal supported face of pseff containing aL + K.
std::size_t b_invariant(const PolarizedSpace& space);
ABResult compute_ab(const PolarizedSpace& space);

// Lexicographic order on (a, b).
std::strong_ordering compare_lex(const ABResult& left, const ABResult& right);

enum class BalanceVerdict { balanced, weakly_balanced_only, not_weakly_balanced, pullback_not_big };

std::string to_string(BalanceVerdict v);

// Compares the (a, b) pair of a subvariety or cover (`other`) against the
// base variety.
BalanceVerdict balanced_verdict(const ABResult& base, const ABResult& other, bool pullback_big);

inline constexpr std::size_t kDefaultClosureBound = 10000;

// Finite group acting on N^1 through integer matrices (x -> M x), together
// with the classes of the geometric components of the rigid adjoint divisor.
struct GroupAction {
  std::vector<IntMatrix> generators;
  std::vector<RatVec> rigid_components;
  std::size_t closure_bound = kDefaultClosureBound;
};

// All elements of the group generated by `action.generators`, sorted.
// Throws BoundExceeded once more than `closure_bound` elements appear.
std::vector<IntMatrix> enumerate_group(const GroupAction& action, std::size_t rank);

// Checks that every generator permutes the extreme rays of pseff, fixes K and
// L, and permutes the rigid components; that the group is finite within the
// closure bound. Throws InputError / BoundExceeded.
void validate_action(const PolarizedSpace& space, const GroupAction& action);

// Canonical basis of {x : M x = x for every generator M}.
std::vector<RatVec> fixed_subspace(const GroupAction& action, std::size_t rank);

// dim N^G - dim (N^G ∩ span(rigid components)). Requires adjoint_rigid ==
// true on the space and a valid action.
std::size_t b_equivariant(const PolarizedSpace& space, const GroupAction& action);

}  // namespace manin
