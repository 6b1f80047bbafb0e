#include <benchmark/benchmark.h>

#include <random>

#include "manin/case_study.hpp"
#include "manin/delpezzo.hpp"
#include "manin/invariants.hpp"

using namespace manin;

namespace {

void BM_SurfaceConeDual(benchmark::State& state) {
  const CaseStudy cs = load_case_study("hilb2-p1p1");
  const PolyCone& peff2 = cs.cones.at("peff2").cone;
  for (auto _ : state) benchmark::DoNotOptimize(dual_cone(peff2));
}
BENCHMARK(BM_SurfaceConeDual);

// Effective cone of the degree-3 del Pezzo surface from its 27 lines: facets
// by double description in rank 7.
void BM_CubicSurfaceEffectiveFacets(benchmark::State& state) {
  const DPLattice lat(6);
  std::vector<RatVec> lines;
  for (const auto& c : enumerate_minus_one(lat)) lines.push_back(c.cls);
  for (auto _ : state) benchmark::DoNotOptimize(PolyCone::from_generators(lines, lat.form()));
}
BENCHMARK(BM_CubicSurfaceEffectiveFacets);

void BM_EnumerateMinusOne(benchmark::State& state) {
  const DPLattice lat(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minus_one(lat));
}
BENCHMARK(BM_EnumerateMinusOne)->DenseRange(6, 8);

void BM_EnumerateRoots(benchmark::State& state) {
  const DPLattice lat(8);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minus_two(lat));
}
BENCHMARK(BM_EnumerateRoots);

void BM_AInvariant(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-3, 3), first(1, 3);
  std::vector<RatVec> gens;
  do {
    gens.clear();
    for (std::size_t i = 0; i < 2 * dim; ++i) {
      RatVec g(dim);
      g[0] = first(rng);
      for (std::size_t j = 1; j < dim; ++j) g[j] = coord(rng);
      gens.push_back(g);
    }
  } while (rank_of(gens) != dim);
  RatVec L(dim), K(dim);
  for (const auto& g : gens) L += g;
  for (std::size_t j = 0; j < dim; ++j) K[j] = coord(rng);
  const PolarizedSpace space("bench", std::vector<std::string>(dim),
                             PolyCone::from_generators(gens, PairingForm::identity(dim)), K, L);
  for (auto _ : state) benchmark::DoNotOptimize(compute_ab(space));
}
BENCHMARK(BM_AInvariant)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
