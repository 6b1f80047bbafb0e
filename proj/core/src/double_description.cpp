#include "double_description.hpp"

#include <cstdint>

#include "manin/errors.hpp"
#include "manin/matrix.hpp"

namespace manin::detail {
namespace {

class RowSet {
 public:
  explicit RowSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  RowSet operator&(const RowSet& o) const {
    RowSet r(*this);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RatVec u;
  RowSet tight;
};

std::size_t rank_of_rows(std::span<const RatVec> rows, const RowSet& set, std::size_t k) {
  std::vector<RatVec> picked;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (set.test(i)) picked.push_back(rows[i]);
  if (picked.empty()) return 0;
  return RatMatrix::from_rows(picked, k).rank();
}

}  // namespace

std::vector<RatVec> extreme_rays(std::span<const RatVec> rows, std::size_t k) {
  const std::size_t m = rows.size();
  if (k == 0) return {};

  // Greedy choice of k independent rows, in input order.
  std::vector<std::size_t> basis;
  std::vector<RatVec> basis_rows;
  std::vector<bool> in_basis(m, false);
  for (std::size_t i = 0; i < m && basis.size() < k; ++i) {
    basis_rows.push_back(rows[i]);
    if (rank_of(basis_rows) == basis_rows.size()) {
      basis.push_back(i);
      in_basis[i] = true;
    } else {
      basis_rows.pop_back();
    }
  }
  if (basis.size() != k) throw InputError("double description: constraint rows do not have full rank");

  // Simplicial start: rays are the columns of the inverse of the basis block.
  const auto inv = RatMatrix::from_rows(basis_rows).inverse();
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < k; ++j) {
    Ray r{inv->column(j).primitive(), RowSet(m)};
    for (std::size_t b = 0; b < k; ++b)
      if (b != j) r.tight.set(basis[b]);
    rays.push_back(std::move(r));
  }

  for (std::size_t t = 0; t < m; ++t) {
    if (in_basis[t]) continue;
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(rows[t], rays[r].u);
      const int s = sgn(value[r]);
      if (s > 0) {
        pos.push_back(r);
      } else if (s < 0) {
        neg.push_back(r);
      } else {
        rays[r].tight.set(t);
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (sgn(value[r]) >= 0) next.push_back(rays[r]);

    for (auto p : pos) {
      for (auto n : neg) {
        const RowSet common = rays[p].tight & rays[n].tight;
        if (k >= 2 && common.count() < k - 2) continue;
        if (k < 2 || rank_of_rows(rows, common, k) != k - 2) continue;
        RatVec combined = value[p] * rays[n].u - value[n] * rays[p].u;
        Ray fresh{combined.primitive(), common};
        fresh.tight.set(t);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.u));
  sort_unique(out);
  return out;
}

}  // namespace manin::detail
