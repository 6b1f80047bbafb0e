#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "manin/ratvec.hpp"

namespace manin::detail {

// Extreme rays of {u in Q^k : row . u >= 0 for every row}, as sorted
// primitive vectors. Requires the rows to have rank k, which makes the cone
// pointed; it may still be lower-dimensional or {0}.
//
// Incremental double description: start from the simplicial cone of k
// independent rows and intersect one half-space at a time, combining pairs of
// adjacent rays across each new hyperplane. Adjacency is decided
// algebraically (the common tight rows have rank k - 2).
std::vector<RatVec> extreme_rays(std::span<const RatVec> rows, std::size_t k);

}  // namespace manin::detail
