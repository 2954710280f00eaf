// Relative performance of the two counting directions and the surrounding
// machinery on the bundled IMF datasets. The interesting ratio is forward
// versus backward at the 85% quota, where tracking [q, C] touches roughly
// 5.7x fewer cells than tracking [0, q].

#include <benchmark/benchmark.h>

#include "wvg/counting.hpp"
#include "wvg/dataset.hpp"
#include "wvg/indices.hpp"
#include "wvg/residue.hpp"

using namespace wvg;

namespace {

NormalizedGame imf2016_super() {
  const Dataset& ds = imf_dataset_2016();
  const Weight q = resolve_quota(QuotaSpec::fraction(85, 100), ds.total);
  return normalize(ds.to_game(q));
}

void BM_ForwardCounts_Imf2016Super(benchmark::State& state) {
  const NormalizedGame ng = imf2016_super();
  const std::uint64_t p = kPrimePool[0];
  for (auto _ : state) {
    auto slice = detail::forward_slice(ng.weights, ng.quota, p);
    benchmark::DoNotOptimize(slice.data());
  }
}
BENCHMARK(BM_ForwardCounts_Imf2016Super)->Unit(benchmark::kMillisecond);

void BM_BackwardCounts_Imf2016Super(benchmark::State& state) {
  const NormalizedGame ng = imf2016_super();
  const std::uint64_t p = kPrimePool[0];
  for (auto _ : state) {
    auto slice = detail::backward_slice(ng.weights, ng.quota, p);
    benchmark::DoNotOptimize(slice.data());
  }
}
BENCHMARK(BM_BackwardCounts_Imf2016Super)->Unit(benchmark::kMillisecond);

void BM_Banzhaf_Imf2016Super(benchmark::State& state) {
  const Dataset& ds = imf_dataset_2016();
  const Weight q = resolve_quota(QuotaSpec::fraction(85, 100), ds.total);
  const WeightedGame game = ds.to_game(q);
  RunOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const PowerDistribution dist = banzhaf(game, opts);
    benchmark::DoNotOptimize(dist.players.data());
  }
}
BENCHMARK(BM_Banzhaf_Imf2016Super)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ResidueAdd(benchmark::State& state) {
  const std::uint64_t p = kPrimePool[0];
  std::vector<std::uint64_t> cells(1 << 16, 1);
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (std::uint64_t v : cells) acc = add_mod(acc, v, p);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * cells.size());
}
BENCHMARK(BM_ResidueAdd);

void BM_Reconstruct(benchmark::State& state) {
  const ResidueSystem sys = default_system(188);
  const ResidueVector v = sys.residues(BigInt("123456789123456789123456789"));
  for (auto _ : state) {
    BigInt x = sys.reconstruct(v);
    benchmark::DoNotOptimize(x.get_mpz_t());
  }
}
BENCHMARK(BM_Reconstruct);

}  // namespace

BENCHMARK_MAIN();
