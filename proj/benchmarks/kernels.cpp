#include <benchmark/benchmark.h>

#include <random>

#include "hforge/abelian.hpp"
#include "hforge/assembly.hpp"
#include "hforge/builders.hpp"
#include "hforge/catalog.hpp"
#include "hforge/checks.hpp"
#include "hforge/signatures.hpp"

using namespace hforge;

namespace {

RingElement random_pm1(const FiniteGroup& g, std::mt19937_64& rng) {
  std::vector<Coeff> c(g.order());
  for (auto& v : c) v = (rng() & 1) ? 1 : -1;
  return RingElement(g, std::move(c));
}

void BM_Convolution(benchmark::State& state) {
  FiniteGroup g = elementary_abelian(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(1);
  RingElement a = random_pm1(g, rng), b = random_pm1(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetLabel("|G|=" + std::to_string(g.order()));
}
BENCHMARK(BM_Convolution)->Arg(4)->Arg(6)->Arg(8);

void BM_VerifyDifferenceSet(benchmark::State& state) {
  FiniteGroup j = cyclic(std::size_t{1} << state.range(0));
  McFarlandResult m = mcfarland_construct(j);
  for (auto _ : state) benchmark::DoNotOptimize(is_hadamard_ds(m.d));
}
BENCHMARK(BM_VerifyDifferenceSet)->Arg(2)->Arg(3)->Arg(4);

void BM_AbelianSignatureSet(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::size_t n = std::size_t{1} << d;
  for (auto _ : state) benchmark::DoNotOptimize(abelian_signature_set(d, {n, n}));
}
BENCHMARK(BM_AbelianSignatureSet)->DenseRange(2, 4);

void BM_PtaProductOrder16(benchmark::State& state) {
  auto cat = builtin_order16_catalog();
  for (auto _ : state) {
    for (const auto& c : cat) benchmark::DoNotOptimize(pta_product_search(c.group));
  }
}
BENCHMARK(BM_PtaProductOrder16);

void BM_PtaProductC4Cubed(benchmark::State& state) {
  FiniteGroup g = abelian_group(AbelianGroup({4, 4, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(pta_product_search(g));
}
BENCHMARK(BM_PtaProductC4Cubed);

}  // namespace

BENCHMARK_MAIN();
