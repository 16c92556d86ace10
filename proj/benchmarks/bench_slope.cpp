#include "nefslope/generators.hpp"
#include "nefslope/simplicity.hpp"
#include "nefslope/slope.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace nefslope;

std::vector<IntersectionProfile> profiles(unsigned n, std::size_t count) {
  std::vector<IntersectionProfile> out;
  for (const auto& inst : gen_random(GenSpec{GenKind::ProductMatrix, n, 4, 1, 42, count}))
    out.push_back(profile_from_matrix(std::get<SymMatrixModel>(inst)));
  return out;
}

void BM_Slope(benchmark::State& state) {
  const auto ps = profiles(static_cast<unsigned>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(slope(ps[i++ % ps.size()]));
}
BENCHMARK(BM_Slope)->DenseRange(2, 6);

void BM_IsNef(benchmark::State& state) {
  const auto ps = profiles(static_cast<unsigned>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_nef(ps[i++ % ps.size()]));
}
BENCHMARK(BM_IsNef)->DenseRange(2, 6);

void BM_RefineIrrational(benchmark::State& state) {
  const IntersectionProfile p{2, {Integer(2), Integer(3), Integer(2)}};
  const AlgebraicNumber s = slope(p).finite->slope;
  const Rational width(1, Integer(1) << static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(refine(s, width));
}
BENCHMARK(BM_RefineIrrational)->Arg(32)->Arg(64)->Arg(128);

void BM_Scan(benchmark::State& state) {
  std::vector<ScanInstance> instances;
  for (const auto& inst : gen_random(GenSpec{GenKind::ProductMatrix, 3, 4, 1, 7, 64})) {
    const auto& m = std::get<SymMatrixModel>(inst);
    instances.push_back({"#" + std::to_string(instances.size()), profile_from_matrix(m), m});
  }
  for (auto _ : state) benchmark::DoNotOptimize(scan(instances, std::nullopt, 1));
}
BENCHMARK(BM_Scan);

}  // namespace

BENCHMARK_MAIN();
