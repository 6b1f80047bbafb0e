#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "manin/int_matrix.hpp"
#include "manin/pairing.hpp"
#include "manin/ratvec.hpp"

namespace manin {

// Z^{1,n}: Picard lattice of the plane blown up in n points, basis
// (h, e_1, ..., e_n), form diag(1, -1, ..., -1), K = -3h + e_1 + ... + e_n.
// Coordinates are coefficients in that basis, so K = (-3, 1, ..., 1).
class DPLattice {
 public:
  // 0 <= n <= 8; throws InputError otherwise.
  explicit DPLattice(int n);

  int n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(n_) + 1; }
  int degree() const noexcept { return 9 - n_; }
  RatVec canonical() const;
  PairingForm form() const;
  std::vector<std::string> basis_labels() const;
  Rational intersect(const RatVec& x, const RatVec& y) const;

  friend bool operator==(const DPLattice&, const DPLattice&) = default;

 private:
  int n_;
};

enum class CurveKind { minus_one, minus_two, other };

std::string to_string(CurveKind kind);

struct CurveClass {
  RatVec cls;
  CurveKind kind = CurveKind::other;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// minus_one: x^2 = -1, x.K = -1; minus_two: x^2 = -2, x.K = 0. Throws
// InputError for non-integral or wrong-dimension classes.
CurveClass classify(const DPLattice& lattice, const RatVec& x);

// Enumeration of integral x = (a; b_1..b_n) with x^2 = s and x.K = k.
//
// Completeness: x.K = k gives sum b_i = -3a - k, and x^2 = s gives
// sum b_i^2 = a^2 - s. Cauchy-Schwarz, (sum b_i)^2 <= n sum b_i^2, turns this
// into q(a) = (9 - n) a^2 + 6 k a + k^2 + n s <= 0. Since 9 - n > 0 the set
// of admissible a is a bounded integer interval, and each |b_i| is at most
// sqrt(a^2 - s). The search covers |a| <= bound, where the default bound is
// one past the largest |a| with q(a) <= 0; a solution with |a| equal to the
// bound means the bound was too small, and BoundExceeded is thrown instead of
// returning a possibly incomplete set.
std::vector<CurveClass> enumerate_minus_one(const DPLattice& lattice, std::optional<long> bound = std::nullopt);
std::vector<CurveClass> enumerate_minus_two(const DPLattice& lattice, std::optional<long> bound = std::nullopt);

// Default |a| search bound for classes with x^2 = s, x.K = k.
long default_enumeration_bound(int n, long self_intersection, long canonical_degree);

// Reflection x -> x + (x.r) r in a (-2)-class r; an isometry fixing K.
IntMatrix reflection(const DPLattice& lattice, const RatVec& root);

// Reflections in e_i - e_{i+1} and, for n >= 3, h - e_1 - e_2 - e_3. They
// generate the Weyl group W(E_n) for 3 <= n <= 8.
std::vector<IntMatrix> simple_reflections(const DPLattice& lattice);

// Isometry fixing K that sends the (-1)-class c to e_n, as a product of
// simple reflections. Throws InputError if c is not a (-1)-class or no such
// isometry exists (n = 2, c = h - e_1 - e_2).
IntMatrix exceptional_basis_change(const DPLattice& lattice, const CurveClass& c);

// Contracting c: after exceptional_basis_change, the orthogonal complement of
// e_n is Z^{1,n-1}. Degree goes up by one.
DPLattice blow_down(const DPLattice& lattice, const CurveClass& c);

// Rank of the span of the given (-2)-classes: the Picard rank lost by the
// crepant contraction. Throws InputError on a non-root.
std::size_t crepant_rank_drop(const DPLattice& lattice, std::span<const CurveClass> roots);

}  // namespace manin
