#include "manin/ratvec.hpp"

#include <algorithm>

#include "manin/errors.hpp"

namespace manin {
namespace {

void require_same_dim(const RatVec& a, const RatVec& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw InputError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

RatVec RatVec::unit(std::size_t dim, std::size_t index) {
  RatVec v(dim);
  v[index] = 1;
  return v;
}

RatVec RatVec::from_ints(std::initializer_list<long> values) {
  RatVec v(values.size());
  std::size_t i = 0;
  for (long x : values) v[i++] = x;
  return v;
}

bool RatVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool RatVec::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

RatVec RatVec::primitive() const {
  if (is_zero()) return *this;
  Integer lcm_den = 1;
  for (const auto& q : coords_) lcm_den = lcm(lcm_den, q.get_den());
  Integer g = 0;
  std::vector<Integer> scaled(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    scaled[i] = coords_[i].get_num() * (lcm_den / coords_[i].get_den());
    g = gcd(g, scaled[i]);
  }
  RatVec out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = Rational(scaled[i] / g);
  return out;
}

RatVec RatVec::canonical_direction() const {
  RatVec p = primitive();
  for (const auto& q : p.coords_) {
    if (sgn(q) == 0) continue;
    if (sgn(q) < 0) p *= Rational(-1);
    break;
  }
  return p;
}

RatVec& RatVec::operator+=(const RatVec& other) {
  require_same_dim(*this, other, "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& other) {
  require_same_dim(*this, other, "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rational& scalar) {
  for (auto& q : coords_) q *= scalar;
  return *this;
}

bool operator==(const RatVec& a, const RatVec& b) { return a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const RatVec& a, const RatVec& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string RatVec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += format_rational(coords_[i]);
  }
  return out + ")";
}

Rational dot(const RatVec& a, const RatVec& b) {
  require_same_dim(a, b, "dot product");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

void sort_unique(std::vector<RatVec>& vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
}

}  // namespace manin
