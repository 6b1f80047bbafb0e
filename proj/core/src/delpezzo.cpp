#include "manin/delpezzo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "manin/errors.hpp"
#include "manin/matrix.hpp"

namespace manin {
namespace {

struct Search {
  int n;
  long target_sq;
  long target_sum;
  std::vector<long> b;
  std::vector<std::vector<long>> found;

  void run(std::size_t index, long rem_sq, long rem_sum) {
    const long left = n - static_cast<long>(index);
    if (left == 0) {
      if (rem_sq == 0 && rem_sum == 0) found.push_back(b);
      return;
    }
    // Remaining entries must satisfy |sum| <= sum of squares, the parity
    // b^2 = b mod 2, and Cauchy-Schwarz.
    if (std::labs(rem_sum) > rem_sq || ((rem_sq - rem_sum) % 2) != 0) return;
    if (rem_sum * rem_sum > left * rem_sq) return;
    const long r = static_cast<long>(std::sqrt(static_cast<double>(rem_sq)) + 1);
    for (long v = -r; v <= r; ++v) {
      if (v * v > rem_sq) continue;
      b[index] = v;
      run(index + 1, rem_sq - v * v, rem_sum - v);
    }
  }
};

long quadratic_bound(int n, long s, long k, long a) {
  return (9 - n) * a * a + 6 * k * a + k * k + static_cast<long>(n) * s;
}

RatVec to_vec(long a, const std::vector<long>& b) {
  RatVec x(b.size() + 1);
  x[0] = a;
  for (std::size_t i = 0; i < b.size(); ++i) x[i + 1] = b[i];
  return x;
}

std::vector<CurveClass> enumerate_classes(const DPLattice& lattice, long s, long k, std::optional<long> bound,
                                          CurveKind kind) {
  const int n = lattice.n();
  const long limit = bound.value_or(default_enumeration_bound(n, s, k));
  if (limit < 0) throw InputError("enumeration bound must be nonnegative");
  std::vector<CurveClass> out;
  for (long a = -limit; a <= limit; ++a) {
    const long target_sq = a * a - s;
    if (target_sq < 0) continue;
    Search search{n, target_sq, -3 * a - k, std::vector<long>(static_cast<std::size_t>(n)), {}};
    search.run(0, target_sq, -3 * a - k);
    if (!search.found.empty() && std::labs(a) == limit)
      throw BoundExceeded("solution " + to_vec(a, search.found.front()).to_string() +
                          " touches the enumeration bound " + std::to_string(limit) + "; increase the bound");
    for (const auto& b : search.found) out.push_back({to_vec(a, b), kind});
  }
  std::sort(out.begin(), out.end(), [](const CurveClass& x, const CurveClass& y) { return x.cls < y.cls; });
  return out;
}

IntMatrix swap_matrix(std::size_t rank, std::size_t i, std::size_t j) {
  IntMatrix m = IntMatrix::identity(rank);
  m(i, i) = m(j, j) = 0;
  m(i, j) = m(j, i) = 1;
  return m;
}

}  // namespace

DPLattice::DPLattice(int n) : n_(n) {
  if (n < 0 || n > 8) throw InputError("del Pezzo lattice needs 0 <= n <= 8, got " + std::to_string(n));
}

RatVec DPLattice::canonical() const {
  RatVec k(rank());
  k[0] = -3;
  for (std::size_t i = 1; i < rank(); ++i) k[i] = 1;
  return k;
}

PairingForm DPLattice::form() const {
  RatMatrix m = RatMatrix::identity(rank());
  for (std::size_t i = 1; i < rank(); ++i) m(i, i) = -1;
  return PairingForm(std::move(m));
}

std::vector<std::string> DPLattice::basis_labels() const {
  std::vector<std::string> labels{"h"};
  for (int i = 1; i <= n_; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

Rational DPLattice::intersect(const RatVec& x, const RatVec& y) const {
  if (x.dim() != rank() || y.dim() != rank()) throw InputError("class dimension does not match the lattice");
  Rational s = x[0] * y[0];
  for (std::size_t i = 1; i < rank(); ++i) s -= x[i] * y[i];
  return s;
}

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::minus_one: return "minus_one";
    case CurveKind::minus_two: return "minus_two";
    case CurveKind::other: return "other";
  }
  return "other";
}

CurveClass classify(const DPLattice& lattice, const RatVec& x) {
  if (x.dim() != lattice.rank()) throw InputError("class " + x.to_string() + " does not match the lattice rank");
  if (!x.is_integral()) throw InputError("class " + x.to_string() + " is not integral");
  const Rational self = lattice.intersect(x, x);
  const Rational with_k = lattice.intersect(x, lattice.canonical());
  CurveKind kind = CurveKind::other;
  if (self == -1 && with_k == -1) kind = CurveKind::minus_one;
  if (self == -2 && with_k == 0) kind = CurveKind::minus_two;
  return {x, kind};
}

long default_enumeration_bound(int n, long s, long k) {
  // q is convex with its vertex within one unit of `centre`, so it is
  // monotone outside [centre - 1, centre + 1].
  const long centre = -3 * k / (9 - n);
  long widest = -1;
  auto visit = [&](long a) {
    const bool admissible = quadratic_bound(n, s, k, a) <= 0;
    if (admissible) widest = std::max(widest, std::labs(a));
    return admissible;
  };
  for (long a = centre - 1; a <= centre + 1; ++a) visit(a);
  for (long a = centre + 2; visit(a); ++a) {
  }
  for (long a = centre - 2; visit(a); --a) {
  }
  return widest + 1;
}

std::vector<CurveClass> enumerate_minus_one(const DPLattice& lattice, std::optional<long> bound) {
  if (lattice.n() == 0) return {};
  return enumerate_classes(lattice, -1, -1, bound, CurveKind::minus_one);
}

std::vector<CurveClass> enumerate_minus_two(const DPLattice& lattice, std::optional<long> bound) {
  return enumerate_classes(lattice, -2, 0, bound, CurveKind::minus_two);
}

IntMatrix reflection(const DPLattice& lattice, const RatVec& root) {
  if (classify(lattice, root).kind != CurveKind::minus_two) throw InputError(root.to_string() + " is not a root");
  const std::size_t r = lattice.rank();
  IntMatrix m = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const long qr_j = (j == 0 ? 1 : -1) * root[j].get_num().get_si();
      m(i, j) += root[i].get_num().get_si() * qr_j;
    }
  return m;
}

std::vector<IntMatrix> simple_reflections(const DPLattice& lattice) {
  std::vector<IntMatrix> out;
  const std::size_t r = lattice.rank();
  for (std::size_t i = 1; i + 1 < r; ++i) {
    RatVec root(r);
    root[i] = 1;
    root[i + 1] = -1;
    out.push_back(reflection(lattice, root));
  }
  if (lattice.n() >= 3) {
    RatVec cremona_root(r);
    cremona_root[0] = 1;
    cremona_root[1] = cremona_root[2] = cremona_root[3] = -1;
    out.push_back(reflection(lattice, cremona_root));
  }
  return out;
}

IntMatrix exceptional_basis_change(const DPLattice& lattice, const CurveClass& c) {
  const CurveClass checked = classify(lattice, c.cls);
  if (checked.kind != CurveKind::minus_one) throw InputError(c.cls.to_string() + " is not a (-1)-class");
  const std::size_t r = lattice.rank();
  IntMatrix w = IntMatrix::identity(r);
  RatVec x = c.cls;

  IntMatrix cremona = IntMatrix::identity(r);
  if (lattice.n() >= 3) cremona = simple_reflections(lattice).back();

  while (sgn(x[0]) != 0) {
    if (sgn(x[0]) < 0 || lattice.n() < 3)
      throw InputError(c.cls.to_string() + " cannot be moved to e_n by an isometry fixing K");
    // Order e_1..e_n by coefficient, most negative first.
    std::vector<std::size_t> order(r - 1);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
    IntMatrix perm(r);
    perm(0, 0) = 1;
    for (std::size_t i = 0; i < order.size(); ++i) perm(i + 1, order[i]) = 1;
    x = perm * x;
    const Rational before = x[0];
    x = cremona * x;
    if (x[0] >= before) throw InputError(c.cls.to_string() + " does not reduce under the Cremona reflection");
    w = cremona * perm * w;
  }
  std::size_t j = 1;
  while (j < r && x[j] != 1) ++j;
  if (j != r - 1) w = swap_matrix(r, j, r - 1) * w;
  return w;
}

DPLattice blow_down(const DPLattice& lattice, const CurveClass& c) {
  exceptional_basis_change(lattice, c);
  return DPLattice(lattice.n() - 1);
}

std::size_t crepant_rank_drop(const DPLattice& lattice, std::span<const CurveClass> roots) {
  std::vector<RatVec> classes;
  for (const auto& root : roots) {
    if (classify(lattice, root.cls).kind != CurveKind::minus_two)
      throw InputError(root.cls.to_string() + " is not a (-2)-class");
    classes.push_back(root.cls);
  }
  return rank_of(classes);
}

}  // namespace manin
