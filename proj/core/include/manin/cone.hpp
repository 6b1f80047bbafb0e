#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "manin/pairing.hpp"
#include "manin/ratvec.hpp"

namespace manin {

// Finitely generated rational convex cone with both representations.
//
// The cone lives in the left space of `pairing()`. Facet normals and
// equations live in the right space and act on the cone through the pairing:
// a facet normal f cuts out the half-space {x : pair(x, f) >= 0}. Equations
// span the annihilator of the cone's linear span; they are empty exactly when
// the cone is full-dimensional.
//
// Generators are the extreme rays as primitive integer vectors; facets are
// primitive integer vectors; both lists are sorted lexicographically, so two
// cones with the same rays compare equal member by member. Lower-dimensional
// cones pick the facet representative w = M f lying in the linear span of the
// generators.
//
// Cones with lineality are rejected at construction.
class PolyCone {
 public:
  // Throws InputError on dimension mismatch, degenerate pairing or a cone
  // that contains a line. An empty (or all-zero) generator list gives {0}.
  static PolyCone from_generators(std::vector<RatVec> generators, PairingForm pairing);

  std::size_t ambient_dim() const noexcept { return pairing_.left_dim(); }
  // Dimension of the linear span.
  std::size_t dimension() const noexcept { return dimension_; }
  bool is_full_dimensional() const noexcept { return dimension_ == ambient_dim(); }

  const std::vector<RatVec>& generators() const noexcept { return generators_; }
  const std::vector<RatVec>& facets() const noexcept { return facets_; }
  const std::vector<RatVec>& equations() const noexcept { return equations_; }
  const PairingForm& pairing() const noexcept { return pairing_; }

  // pair(x, normal) for a right-space normal.
  Rational evaluate(const RatVec& x, const RatVec& normal) const { return pairing_.pair(x, normal); }

  bool contains(const RatVec& x) const;
  // Strictly positive on every facet of a full-dimensional cone.
  bool contains_in_interior(const RatVec& x) const;
  bool is_extreme_ray(const RatVec& x) const;

  friend bool operator==(const PolyCone&, const PolyCone&) = default;

 private:
  PolyCone() = default;

  PairingForm pairing_;
  std::size_t dimension_ = 0;
  std::vector<RatVec> generators_;
  std::vector<RatVec> facets_;
  std::vector<RatVec> equations_;
};

// All right-space vectors pairing >= 0 with every generator. The result lives
// in the right space under the transposed pairing, so dual_cone(dual_cone(C))
// is again a cone in C's space. Requires C full-dimensional (otherwise the
// dual has lineality); throws InputError.
PolyCone dual_cone(const PolyCone& cone);

// Exact membership; throws InputError on dimension mismatch.
bool contains(const PolyCone& cone, const RatVec& x);

struct SupportedFace {
  PolyCone face;
  // Codimension of the face in the ambient space: rank of the tight facet
  // normals together with the cone's equations.
  std::size_t codim = 0;
  std::vector<RatVec> tight_facets;
};

// Smallest face of `cone` cut out by supporting hyperplanes that contains x:
// the generators lying on every facet that is tight at x. Throws
// PreconditionError if x is not in the cone.
SupportedFace minimal_supported_face(const PolyCone& cone, const RatVec& x);

// A ray together with the vector certifying its status.
struct RayWitness {
  RatVec ray;
  RatVec witness;
};

// Result of comparing a computed cone against a claimed generator list.
//  missing: claimed rays that are not extreme rays of the computed cone. The
//           witness is a facet normal of the computed cone the ray violates,
//           or the ray itself when it lies in the cone but is not extreme.
//  extra:   extreme rays of the computed cone absent from the claim. The
//           witness is a facet normal of cone(claim) the ray violates, or the
//           ray itself when cone(claim) contains it.
struct GeneratorComparison {
  bool equal = false;
  std::vector<RayWitness> missing;
  std::vector<RayWitness> extra;
};

GeneratorComparison compare_generators(const PolyCone& computed, std::span<const RatVec> claimed);

// Every `candidate` pairs >= 0 with every generator of `cone`. Violations are
// reported with the generator that pairs negatively as witness.
std::vector<RayWitness> dual_violations(const PolyCone& cone, std::span<const RatVec> candidates);

}  // namespace manin
