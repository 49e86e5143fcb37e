#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "insdel/channel.hpp"
#include "insdel/gf.hpp"
#include "insdel/highrate.hpp"
#include "insdel/listconcat.hpp"
#include "insdel/rs.hpp"

namespace {

using namespace insdel;

Poly random_poly(std::mt19937_64& rng, const Field& f, std::size_t d) {
  std::vector<FieldElement> c(d);
  for (auto& x : c) x = static_cast<FieldElement>(rng() % f.order());
  return Poly(std::move(c));
}

const HighRateSpec& highrate_spec() {
  static const HighRateSpec spec = [] {
    HighRateParams p;
    p.delta = 1.0 / 8;
    p.m = 22;
    p.beta = 3.0 / 22;
    p.outer_dimension = 6;
    return build_highrate_explicit(16, p);
  }();
  return spec;
}

// Constant inner words over q² letters: the smallest decodable concatenation.
const ConcatCodeSpec& concat_spec() {
  static const ConcatCodeSpec spec = [] {
    constexpr std::size_t q = 16;
    std::vector<SymbolString> words;
    for (Symbol x = 0; x < q * q; ++x) words.emplace_back(std::vector<Symbol>(3, x), q * q);
    auto field = std::make_shared<const Field>(Field::of_order(q));
    return make_concat_spec(RSCodeSpec::make(field, 1), make_table(std::move(words), q * q), 0.05, 0.9);
  }();
  return spec;
}

void BM_FieldMul(benchmark::State& state) {
  const Field f(2, static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(5);
  std::vector<FieldElement> xs(1024);
  for (auto& x : xs) x = static_cast<FieldElement>(rng() % f.order());
  for (auto _ : state) {
    FieldElement acc = 1;
    for (auto x : xs) acc = f.mul(acc ^ x, x | 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_FieldMul)->Arg(6)->Arg(12)->Arg(16);

void BM_RsDecodeErrorsErasures(benchmark::State& state) {
  auto field = std::make_shared<const Field>(Field::of_order(256));
  const auto spec = RSCodeSpec::make(field, static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(6);
  const auto word = rs_encode(spec, random_poly(rng, *field, spec.d));
  ReceivedWord received(word.begin(), word.end());
  const std::size_t errors = (spec.n - spec.d) / 4;
  for (std::size_t i = 0; i < errors; ++i) received[i * 3] = field->add(word[i * 3], 1);
  for (std::size_t i = 0; i < errors; ++i) received[i * 3 + 1] = std::nullopt;
  for (auto _ : state) benchmark::DoNotOptimize(rs_decode_ee(spec, received));
}
BENCHMARK(BM_RsDecodeErrorsErasures)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_SudanListDecode(benchmark::State& state) {
  auto field = std::make_shared<const Field>(Field::of_order(64));
  const auto spec = RSCodeSpec::make(field, 2);
  std::mt19937_64 rng(7);
  CandidateSet j;
  for (int line = 0; line < 3; ++line) {
    const Poly p = random_poly(rng, *field, spec.d);
    for (FieldElement x = 0; x < 64; x += 2) j.insert(x, poly_eval(*field, p, x));
  }
  for (std::int64_t i = 0; i < state.range(0); ++i) j.insert(rng() % 64, rng() % 64);
  const auto threshold = static_cast<std::size_t>(std::sqrt(2.0 * spec.d * static_cast<double>(j.size()))) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(sudan_list_decode(spec, j, threshold));
  state.counters["J"] = static_cast<double>(j.size());
}
BENCHMARK(BM_SudanListDecode)->Arg(0)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_InnerDecode(benchmark::State& state) {
  const auto& spec = highrate_spec();
  std::mt19937_64 rng(8);
  std::vector<SymbolString> windows;
  for (int i = 0; i < 64; ++i) {
    auto s = spec.inner.codewords[rng() % spec.inner.size()].symbols();
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(rng() % s.size()));
    windows.emplace_back(std::move(s), 2);
  }
  for (auto _ : state) {
    for (const auto& w : windows) benchmark::DoNotOptimize(inner_decode(spec.inner, w, spec.inner_distance));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(windows.size()));
}
BENCHMARK(BM_InnerDecode);

void BM_HighRateDecode(benchmark::State& state) {
  const auto& spec = highrate_spec();
  std::mt19937_64 rng(9);
  const auto c = hr_encode(spec, random_poly(rng, *spec.outer.field, spec.outer.d));
  const auto s = corrupt(c, spec.design_budget, Strategy::Uniform, 1).output;
  for (auto _ : state) benchmark::DoNotOptimize(hr_decode(spec, s));
  state.counters["N"] = static_cast<double>(spec.block_length());
}
BENCHMARK(BM_HighRateDecode)->Unit(benchmark::kMicrosecond);

void BM_WindowSweep(benchmark::State& state) {
  const auto& spec = concat_spec();
  std::mt19937_64 rng(10);
  const auto c = concat_encode(spec, random_poly(rng, *spec.outer.field, spec.outer.d));
  const auto s = corrupt(c, spec.decode_budget(), Strategy::Uniform, 2).output;
  for (auto _ : state) benchmark::DoNotOptimize(window_sweep(spec, s));
}
BENCHMARK(BM_WindowSweep)->Unit(benchmark::kMicrosecond);

void BM_ListConcatDecode(benchmark::State& state) {
  const auto& spec = concat_spec();
  std::mt19937_64 rng(11);
  const auto c = concat_encode(spec, random_poly(rng, *spec.outer.field, spec.outer.d));
  const auto s = corrupt(c, spec.decode_budget(), Strategy::Uniform, 3).output;
  for (auto _ : state) benchmark::DoNotOptimize(list_concat_decode(spec, s));
}
BENCHMARK(BM_ListConcatDecode)->Unit(benchmark::kMicrosecond);

}  // namespace
