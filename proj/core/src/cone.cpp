#include "manin/cone.hpp"

#include <algorithm>
#include <utility>

#include "double_description.hpp"
#include "manin/errors.hpp"
#include "manin/matrix.hpp"

namespace manin {

PolyCone PolyCone::from_generators(std::vector<RatVec> generators, PairingForm pairing) {
  if (!pairing.is_square()) throw InputError("cone pairing must be square");
  const std::size_t d = pairing.left_dim();
  const auto pairing_inverse = pairing.matrix().inverse();
  if (!pairing_inverse) throw InputError("cone pairing is degenerate");

  std::vector<RatVec> rays;
  for (auto& g : generators) {
    if (g.dim() != d) {
      throw InputError("generator " + g.to_string() + " has dimension " + std::to_string(g.dim()) +
                       ", expected " + std::to_string(d));
    }
    if (!g.is_zero()) rays.push_back(g.primitive());
  }
  sort_unique(rays);

  PolyCone cone;
  cone.pairing_ = std::move(pairing);
  const RatMatrix& M = cone.pairing_.matrix();

  const std::vector<RatVec> span = span_basis(rays, d);
  const std::size_t k = span.size();
  cone.dimension_ = k;

  // Equations: right-space y with pair(g, y) = 0 for the whole span.
  {
    std::vector<RatVec> functionals;
    for (const auto& b : span) functionals.push_back(M.transposed() * b);
    for (auto& e : RatMatrix::from_rows(functionals, d).nullspace())
      cone.equations_.push_back(e.canonical_direction());
    sort_unique(cone.equations_);
  }
  if (k == 0) return cone;

  // Facets, computed in span coordinates u with functional w = B^T u.
  std::vector<RatVec> constraint_rows;
  constraint_rows.reserve(rays.size());
  const RatMatrix B = RatMatrix::from_rows(span, d);
  for (const auto& g : rays) constraint_rows.push_back(B * g);
  const std::vector<RatVec> dual_rays = detail::extreme_rays(constraint_rows, k);
  if (rank_of(dual_rays) < k) throw InputError("cone contains a line; lineality is not supported");

  const RatMatrix Bt = B.transposed();
  std::vector<RatVec> functionals;
  for (const auto& u : dual_rays) {
    RatVec w = Bt * u;
    functionals.push_back(w);
    cone.facets_.push_back(((*pairing_inverse) * w).primitive());
  }
  sort_unique(cone.facets_);

  // A ray is extreme when the facets through it cut out a line in the span.
  for (const auto& g : rays) {
    std::vector<RatVec> tight;
    for (const auto& w : functionals)
      if (sgn(dot(g, w)) == 0) tight.push_back(w);
    if (rank_of(tight) + 1 == k) cone.generators_.push_back(g);
  }
  return cone;
}

bool PolyCone::contains(const RatVec& x) const {
  if (x.dim() != ambient_dim()) {
    throw InputError("membership: vector of dimension " + std::to_string(x.dim()) + " in a cone of dimension " +
                     std::to_string(ambient_dim()));
  }
  for (const auto& e : equations_)
    if (sgn(evaluate(x, e)) != 0) return false;
  for (const auto& f : facets_)
    if (sgn(evaluate(x, f)) < 0) return false;
  return true;
}

bool PolyCone::contains_in_interior(const RatVec& x) const {
  if (!is_full_dimensional() || !contains(x)) return false;
  return std::all_of(facets_.begin(), facets_.end(), [&](const RatVec& f) { return sgn(evaluate(x, f)) > 0; });
}

bool PolyCone::is_extreme_ray(const RatVec& x) const {
  if (x.dim() != ambient_dim()) throw InputError("is_extreme_ray: dimension mismatch");
  if (x.is_zero()) return false;
  return std::binary_search(generators_.begin(), generators_.end(), x.primitive());
}

PolyCone dual_cone(const PolyCone& cone) {
  if (!cone.is_full_dimensional()) {
    throw InputError("dual of a cone of dimension " + std::to_string(cone.dimension()) + " in ambient dimension " +
                     std::to_string(cone.ambient_dim()) + " has lineality");
  }
  return PolyCone::from_generators(cone.facets(), cone.pairing().transposed());
}

bool contains(const PolyCone& cone, const RatVec& x) { return cone.contains(x); }

SupportedFace minimal_supported_face(const PolyCone& cone, const RatVec& x) {
  if (!cone.contains(x)) throw PreconditionError("class " + x.to_string() + " is not in the cone");
  SupportedFace out{cone, 0, {}};
  for (const auto& f : cone.facets())
    if (sgn(cone.evaluate(x, f)) == 0) out.tight_facets.push_back(f);

  std::vector<RatVec> face_gens;
  for (const auto& g : cone.generators()) {
    const bool on_all = std::all_of(out.tight_facets.begin(), out.tight_facets.end(),
                                    [&](const RatVec& f) { return sgn(cone.evaluate(g, f)) == 0; });
    if (on_all) face_gens.push_back(g);
  }
  out.face = PolyCone::from_generators(std::move(face_gens), cone.pairing());

  std::vector<RatVec> normals = out.tight_facets;
  normals.insert(normals.end(), cone.equations().begin(), cone.equations().end());
  out.codim = rank_of(normals);
  return out;
}

namespace {

// Lexicographically first facet normal of `cone` that `x` violates.
std::optional<RatVec> first_violated_facet(const PolyCone& cone, const RatVec& x) {
  for (const auto& e : cone.equations())
    if (sgn(cone.evaluate(x, e)) != 0) return sgn(cone.evaluate(x, e)) > 0 ? -e : e;
  for (const auto& f : cone.facets())
    if (sgn(cone.evaluate(x, f)) < 0) return f;
  return std::nullopt;
}

}  // namespace

GeneratorComparison compare_generators(const PolyCone& computed, std::span<const RatVec> claimed) {
  std::vector<RatVec> claim;
  for (const auto& c : claimed) {
    if (c.dim() != computed.ambient_dim()) throw InputError("compare_generators: dimension mismatch");
    if (!c.is_zero()) claim.push_back(c.primitive());
  }
  sort_unique(claim);
  const PolyCone claimed_cone = PolyCone::from_generators(claim, computed.pairing());

  GeneratorComparison out;
  for (const auto& c : claim) {
    if (computed.is_extreme_ray(c)) continue;
    auto witness = first_violated_facet(computed, c);
    out.missing.push_back({c, witness ? *witness : c});
  }
  for (const auto& g : computed.generators()) {
    if (std::binary_search(claim.begin(), claim.end(), g)) continue;
    auto witness = first_violated_facet(claimed_cone, g);
    out.extra.push_back({g, witness ? *witness : g});
  }
  out.equal = out.missing.empty() && out.extra.empty();
  return out;
}

std::vector<RayWitness> dual_violations(const PolyCone& cone, std::span<const RatVec> candidates) {
  std::vector<RayWitness> out;
  for (const auto& y : candidates) {
    for (const auto& g : cone.generators()) {
      if (sgn(cone.evaluate(g, y)) < 0) {
        out.push_back({y, g});
        break;
      }
    }
  }
  return out;
}

}  // namespace manin
