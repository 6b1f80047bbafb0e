#include <algorithm>
#include <deque>
#include <set>

#include "manin/errors.hpp"
#include "manin/invariants.hpp"
#include "manin/matrix.hpp"

namespace manin {
namespace {

void require_square_of_rank(const GroupAction& action, std::size_t rank) {
  for (const auto& m : action.generators)
    if (m.size() != rank)
      throw InputError("action generator " + m.to_string() + " is not " + std::to_string(rank) + "x" +
                       std::to_string(rank));
  for (const auto& r : action.rigid_components)
    if (r.dim() != rank) throw InputError("rigid component " + r.to_string() + " has the wrong dimension");
}

std::vector<RatVec> sorted_image(const IntMatrix& m, const std::vector<RatVec>& vectors, bool as_rays) {
  std::vector<RatVec> image;
  image.reserve(vectors.size());
  for (const auto& v : vectors) image.push_back(as_rays ? (m * v).primitive() : m * v);
  sort_unique(image);
  return image;
}

}  // namespace

std::vector<IntMatrix> enumerate_group(const GroupAction& action, std::size_t rank) {
  require_square_of_rank(action, rank);
  std::set<IntMatrix> seen{IntMatrix::identity(rank)};
  std::deque<IntMatrix> frontier{IntMatrix::identity(rank)};
  while (!frontier.empty()) {
    const IntMatrix g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : action.generators) {
      IntMatrix h = s * g;
      if (seen.insert(h).second) {
        if (seen.size() > action.closure_bound)
          throw BoundExceeded("group closure exceeds " + std::to_string(action.closure_bound) +
                              " elements (raise the closure bound)");
        frontier.push_back(std::move(h));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

void validate_action(const PolarizedSpace& space, const GroupAction& action) {
  const std::size_t rho = space.rank();
  require_square_of_rank(action, rho);
  std::vector<RatVec> rigid = action.rigid_components;
  sort_unique(rigid);
  for (const auto& m : action.generators) {
    const std::string tag = "action generator " + m.to_string();
    if (sorted_image(m, space.pseff().generators(), true) != space.pseff().generators())
      throw InputError(tag + " does not permute the extreme rays of the pseudo-effective cone");
    if (m * space.canonical() != space.canonical()) throw InputError(tag + " does not fix K");
    if (m * space.polarization() != space.polarization()) throw InputError(tag + " does not fix L");
    if (sorted_image(m, rigid, false) != rigid) throw InputError(tag + " does not permute the rigid components");
  }
  enumerate_group(action, rho);
}

std::vector<RatVec> fixed_subspace(const GroupAction& action, std::size_t rank) {
  require_square_of_rank(action, rank);
  std::vector<RatVec> rows;
  const RatMatrix id = RatMatrix::identity(rank);
  for (const auto& m : action.generators) {
    const RatMatrix diff = m.to_rational() - id;
    for (std::size_t r = 0; r < rank; ++r) rows.push_back(diff.row(r));
  }
  auto basis = RatMatrix::from_rows(rows, rank).nullspace();
  for (auto& v : basis) v = v.canonical_direction();
  return basis;
}

std::size_t b_equivariant(const PolarizedSpace& space, const GroupAction& action) {
  if (space.adjoint_rigid() != true)
    throw PreconditionError(space.name() + ": equivariant b requires a rigid adjoint divisor");
  space.validate();
  validate_action(space, action);
  const std::vector<RatVec> fixed = fixed_subspace(action, space.rank());
  std::vector<RatVec> both = fixed;
  both.insert(both.end(), action.rigid_components.begin(), action.rigid_components.end());
  // dim Fix - dim(Fix ∩ V) = dim(Fix + V) - dim V
  return rank_of(both) - rank_of(action.rigid_components);
}

}  // namespace manin
