#pragma once

// Test-only reference implementations. They share no algorithmic code with
// the library: own elimination, exhaustive subset search, bisection, naive
// lattice search and Vandermonde solves.

#include <cstddef>
#include <ostream>
#include <optional>
#include <vector>

#include "manin/rational.hpp"
#include "manin/ratvec.hpp"

namespace oracle {

using manin::Rational;
using manin::RatVec;
using Matrix = std::vector<std::vector<Rational>>;

// Rank by plain Gaussian elimination.
std::size_t rank(Matrix rows);

// Kernel basis of the matrix (columns = unknowns).
std::vector<RatVec> kernel(Matrix rows, std::size_t cols);

// x . (M y)
Rational pair(const Matrix& m, const RatVec& x, const RatVec& y);

// Facet normals (right space of `m`) of a full-dimensional cone by trying
// every (d-1)-subset of generators. Normals are scaled to primitive integer
// vectors and returned sorted.
std::vector<RatVec> facets_by_subsets(const std::vector<RatVec>& gens, const Matrix& m);

bool member(const std::vector<RatVec>& facets, const Matrix& m, const RatVec& x);
bool interior(const std::vector<RatVec>& facets, const Matrix& m, const RatVec& x);

// The least t with tL + K in the cone, found by bisection and confirmed as
// the unique boundary crossing among the candidate roots.
Rational a_by_bisection(const std::vector<RatVec>& gens, const Matrix& m, const RatVec& K, const RatVec& L);

// Classes x in Z^{1,n} with x.x = self and K.x = kdeg, |x_0| <= bound, by a
// search that only prunes on the remaining sum of squares.
std::vector<RatVec> lattice_classes(int n, long self, long kdeg, long bound);

// Coefficients c_0..c_n of the degree-n polynomial through (i, values[i-1]).
std::vector<Rational> interpolate(const std::vector<Rational>& values);

Matrix identity(std::size_t n);

}  // namespace oracle

namespace manin {

// Readable gtest failure messages.
inline void PrintTo(const RatVec& v, std::ostream* os) { *os << v.to_string(); }

}  // namespace manin
