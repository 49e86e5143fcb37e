#include <benchmark/benchmark.h>

#include <random>

#include "insdel/seqkit.hpp"

namespace {

using insdel::Symbol;
using insdel::SymbolString;

SymbolString random_string(std::mt19937_64& rng, unsigned k, std::size_t n) {
  std::vector<Symbol> s(n);
  for (auto& x : s) x = static_cast<Symbol>(rng() % k);
  return SymbolString(std::move(s), k);
}

void BM_LcsDp(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_string(rng, 2, n);
  const auto b = random_string(rng, 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(insdel::seqkit::lcs_dp(a.view(), b.view()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LcsDp)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_LcsBitParallel(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_string(rng, 2, n);
  const auto b = random_string(rng, 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(insdel::seqkit::lcs_bitparallel(a.view(), b.view()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LcsBitParallel)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNSquared);

// Many short texts against one pattern, as in window scoring.
void BM_LcsPatternReuse(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto pattern = random_string(rng, 128, 8);
  std::vector<SymbolString> texts;
  for (int i = 0; i < 256; ++i) texts.push_back(random_string(rng, 128, 12));
  const insdel::seqkit::LcsPattern compiled(pattern);
  for (auto _ : state) {
    for (const auto& t : texts) benchmark::DoNotOptimize(compiled.lcs(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(texts.size()));
}
BENCHMARK(BM_LcsPatternReuse);

void BM_LcsOfCode(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::vector<SymbolString> code;
  for (int i = 0; i < state.range(0); ++i) code.push_back(random_string(rng, 2, 32));
  for (auto _ : state) benchmark::DoNotOptimize(insdel::seqkit::lcs_of_code(code));
}
BENCHMARK(BM_LcsOfCode)->Arg(64)->Arg(256);

}  // namespace
