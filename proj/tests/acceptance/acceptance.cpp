// Acceptance run: one PASS/FAIL line per primary criterion, INFO lines for
// companion measurements. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "insdel/channel.hpp"
#include "insdel/error.hpp"
#include "insdel/highrate.hpp"
#include "insdel/innersearch.hpp"
#include "insdel/listconcat.hpp"
#include "insdel/regimes.hpp"
#include "insdel/rs.hpp"
#include "insdel/seqkit.hpp"
#include "oracles.hpp"

namespace insdel {
namespace {

using seqkit::ErrorKind;

// Pinned tolerances and workloads.
constexpr std::size_t kEquivalenceCodes = 10'000;
constexpr std::size_t kDistancePairs = 1'000;
constexpr std::size_t kConcatBoundCodes = 500;
constexpr std::size_t kSudanSets = 200;
constexpr std::size_t kRsPatterns = 1'000;
constexpr std::size_t kHighRateTrials = 200;
constexpr std::size_t kConcatTrials = 100;
constexpr std::size_t kSlackSamples = 100'000;
constexpr double kSudanSizeSlack = 1e-9;
constexpr std::size_t kAllowedMismatches = 0;
constexpr double kRequiredSuccess = 1.0;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

class Runner {
 public:
  void primary(const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.1fs): %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
    failures_ += o.passed ? 0 : 1;
  }

  static void info(const std::string& name, const std::string& detail) {
    std::printf("INFO %s: %s\n", name.c_str(), detail.c_str());
    std::fflush(stdout);
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

Outcome error_kind_equivalence() {
  testing::Gen gen(1001);
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  while (checked < kEquivalenceCodes) {
    const auto k = static_cast<unsigned>(gen.between(2, 3));
    const auto code = gen.code(k, gen.between(1, 6), gen.between(2, 4));
    if (code.size() < 2) continue;
    const std::size_t t = gen.between(1, 2);
    const bool del = seqkit::decodable_under(code, {ErrorKind::DeletionsOnly, t});
    const bool ins = seqkit::decodable_under(code, {ErrorKind::InsertionsOnly, t});
    const bool mixed = seqkit::decodable_under(code, {ErrorKind::Mixed, t});
    disagreements += del != ins || del != mixed;
    ++checked;
  }
  return {disagreements <= kAllowedMismatches, fmt("%zu codes, %zu disagreements", checked, disagreements)};
}

Outcome distance_identity() {
  testing::Gen gen(1002);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kDistancePairs; ++i) {
    const auto k = static_cast<unsigned>(gen.between(2, 3));
    const auto a = gen.string(k, gen.between(0, 8));
    const auto b = gen.string(k, gen.between(0, 8));
    const std::size_t bfs = testing::string_bfs_distance(a, b, std::max(a.size(), b.size()));
    mismatches += seqkit::insdel_distance(a, b) != bfs;
  }
  return {mismatches <= kAllowedMismatches, fmt("%zu pairs, %zu mismatches", kDistancePairs, mismatches)};
}

Outcome concatenation_lcs_bound() {
  testing::Gen gen(1003);
  std::size_t codes = 0;
  std::size_t violations = 0;
  std::size_t tight = 0;
  while (codes < kConcatBoundCodes) {
    const auto q = static_cast<unsigned>(gen.between(2, 4));
    const auto outer = gen.code(q, gen.between(1, 5), gen.between(2, 30));
    const auto inner = gen.code(static_cast<unsigned>(gen.between(2, 3)), gen.between(1, 4), q);
    if (outer.size() < 2 || inner.size() < q) continue;
    const auto r = lemma5_exhaustive(outer, inner);
    violations += r.violations != 0 || r.lcs_code > r.bound;
    tight += r.lcs_code == r.bound;
    ++codes;
  }
  return {violations <= kAllowedMismatches, fmt("%zu codes, %zu violations, %zu at equality", codes, violations, tight)};
}

Outcome sudan_oracle() {
  testing::Gen gen(1004);
  const std::vector<std::uint64_t> orders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::size_t oversize = 0;
  for (std::size_t i = 0; i < kSudanSets; ++i) {
    const std::uint64_t q = orders[gen.below(orders.size())];
    const auto field = std::make_shared<const Field>(Field::of_order(q));
    const auto spec = RSCodeSpec::make(field, gen.between(1, std::min<std::size_t>(3, q)));
    CandidateSet j;
    const std::size_t planted = gen.between(0, 3);
    for (std::size_t l = 0; l < planted; ++l) {
      const Poly p = gen.poly(*field, spec.d);
      for (std::size_t x = 0; x < q; ++x) {
        if (gen.below(4) != 0) j.insert(static_cast<FieldElement>(x), poly_eval(*field, p, static_cast<FieldElement>(x)));
      }
    }
    const std::size_t noise = gen.between(0, 2 * q);
    for (std::size_t l = 0; l < noise; ++l) {
      j.insert(static_cast<FieldElement>(gen.below(q)), static_cast<FieldElement>(gen.below(q)));
    }
    for (std::size_t threshold = 1; threshold <= j.size() + 1; ++threshold) {
      if (!sudan_threshold_sound(spec.d, j.size(), threshold)) continue;
      const auto got = sudan_list_decode(spec, j, threshold);
      mismatches += got != testing::scan_all_polys(spec, j, threshold);
      const double cap = std::sqrt(2.0 * static_cast<double>(j.size()) / static_cast<double>(spec.d));
      oversize += static_cast<double>(got.size()) > cap + kSudanSizeSlack;
      ++comparisons;
    }
  }
  return {mismatches + oversize <= kAllowedMismatches,
          fmt("%zu sets, %zu threshold comparisons, %zu mismatches, %zu over size bound", kSudanSets, comparisons,
              mismatches, oversize)};
}

Outcome rs_errors_and_erasures() {
  testing::Gen gen(1005);
  const auto field = std::make_shared<const Field>(Field::of_order(64));
  std::size_t inside_ok = 0;
  std::size_t boundary_wrong = 0;
  std::size_t boundary_declined = 0;
  for (std::size_t i = 0; i < 2 * kRsPatterns; ++i) {
    const bool boundary = i >= kRsPatterns;
    const auto spec = RSCodeSpec::make(field, gen.between(1, 60));
    const std::size_t slack = spec.n - spec.d;  // 2E + S <= slack decodes
    const std::size_t total = boundary ? slack + 1 : gen.between(0, slack);
    const std::size_t errors = gen.between(boundary ? 1 : 0, total / 2);
    const std::size_t erasures = total - 2 * errors;
    const Poly msg = gen.poly(*field, spec.d);
    const auto word = rs_encode(spec, msg);
    ReceivedWord received(word.begin(), word.end());
    std::vector<std::size_t> pos(spec.n);
    for (std::size_t p = 0; p < spec.n; ++p) pos[p] = p;
    std::shuffle(pos.begin(), pos.end(), gen.engine());
    for (std::size_t p = 0; p < errors; ++p) {
      received[pos[p]] = field->add(word[pos[p]], static_cast<FieldElement>(gen.between(1, 63)));
    }
    for (std::size_t p = errors; p < errors + erasures; ++p) received[pos[p]] = std::nullopt;
    const auto got = rs_decode_ee(spec, received);
    if (!boundary) {
      inside_ok += got == msg;
    } else if (!got) {
      ++boundary_declined;
    } else {
      boundary_wrong += *got != msg;
    }
  }
  const double rate = static_cast<double>(inside_ok) / static_cast<double>(kRsPatterns);
  return {rate >= kRequiredSuccess && boundary_wrong <= kAllowedMismatches,
          fmt("inside radius %zu/%zu exact; at 2E+S=n-d+1: %zu wrong, %zu declined of %zu", inside_ok, kRsPatterns,
              boundary_wrong, boundary_declined, kRsPatterns)};
}

// Density, radius and, for short tables, the exact radius by ball enumeration.
std::string table_violation(const CodeTable& table) {
  const auto issues = table_issues(table);
  if (!issues.empty()) return issues.front();
  if (table.density) {
    for (const auto& w : table.codewords) {
      if (!passes_density(w, *table.density)) return "codeword fails density: " + w.to_string();
    }
  }
  if (table.size() < 2) return {};
  const std::size_t r = seqkit::radius_from_lcs(table.codewords);
  if (r < table.radius) return fmt("radius %zu below declared %zu", r, table.radius);
  if (table.length <= 8) {
    if (!seqkit::decodable_under(table.codewords, {ErrorKind::DeletionsOnly, r})) {
      return fmt("not decodable at radius %zu", r);
    }
    if (r + 1 <= table.length && seqkit::decodable_under(table.codewords, {ErrorKind::DeletionsOnly, r + 1})) {
      return fmt("still decodable at radius %zu + 1", r);
    }
  }
  return {};
}

Outcome inner_contracts(const std::vector<const CodeTable*>& extra) {
  std::vector<CodeTable> tables;
  for (std::size_t m = 4; m <= 16; ++m) {
    for (double delta : {0.1, 0.125, 0.2, 0.25}) {
      for (double beta : {0.2, 0.3, 0.5}) {
        for (bool endpoints : {false, true}) {
          try {
            tables.push_back(search_dense_binary(m, delta, beta, endpoints));
          } catch (const ConstructionFailure&) {
          }
        }
      }
    }
  }
  for (std::size_t m = 2; m <= 8; ++m) {
    for (unsigned k = 2; k <= 4; ++k) {
      for (double tau : {0.2, 0.4, 0.5, 0.6}) {
        try {
          tables.push_back(search_kary(m, k, tau));
        } catch (const ConstructionFailure&) {
        }
      }
    }
  }
  std::vector<const CodeTable*> all;
  for (const auto& t : tables) all.push_back(&t);
  all.insert(all.end(), extra.begin(), extra.end());
  std::size_t violations = 0;
  std::size_t exact = 0;
  std::string first;
  for (const auto* t : all) {
    const auto v = table_violation(*t);
    if (!v.empty()) {
      if (first.empty()) first = fmt("m=%zu k=%u: ", t->length, t->alphabet_size) + v;
      ++violations;
    }
    exact += t->length <= 8 && t->size() >= 2;
  }
  auto detail = fmt("%zu tables, %zu radius-confirmed by enumeration, %zu violations", all.size(), exact, violations);
  if (!first.empty()) detail += "; first: " + first;
  return {violations <= kAllowedMismatches, detail};
}

struct RoundTrip {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t census_violations = 0;
  std::size_t clean_successes = 0;
  std::size_t clean_trials = 0;
};

RoundTrip highrate_round_trip(const HighRateSpec& spec, std::size_t trials, std::uint64_t seed,
                              std::string& per_strategy) {
  const cli::Codec codec(SpecFile{"highrate", spec});
  std::mt19937_64 rng(seed);
  RoundTrip out;
  const auto bounds = counting_bounds(spec, spec.design_budget);
  for (auto strategy : all_strategies()) {
    std::size_t ok = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Poly msg = codec.random_message(rng);
      const auto c = codec.encode(msg);
      if (t < trials / 10) {
        ++out.clean_trials;
        out.clean_successes += hr_decode(spec, c) == msg;
      }
      auto ctx = codec.channel_context(msg);
      const auto r = corrupt(c, spec.design_budget, strategy, rng(), ctx);
      HighRateTrace trace;
      const bool decoded = hr_decode(spec, r.output, &trace) == msg;
      ok += decoded;
      const auto census = buffer_census(spec, msg, c, r.output, trace);
      out.census_violations += census.bad_buffers > bounds.bad_buffers_max || census.good_buffers < bounds.good_buffers_min;
    }
    out.trials += trials;
    out.successes += ok;
    per_strategy += fmt(" %s=%zu/%zu", std::string(strategy_name(strategy)).c_str(), ok, trials);
  }
  return out;
}

bool round_trip_passed(const RoundTrip& r) {
  return r.successes == r.trials && r.clean_successes == r.clean_trials && r.census_violations == 0;
}

std::string round_trip_detail(const HighRateSpec& spec, const RoundTrip& r, const std::string& per_strategy) {
  const auto cc = counting_constants(spec);
  const auto b = counting_bounds(spec, spec.design_budget);
  return fmt("N=%zu m=%zu B=%zu T=%zu c_b=%zu c_c=%zu bad<=%zu good>=%zu; clean %zu/%zu; at T:", spec.block_length(),
             spec.m(), spec.buffer_length, spec.design_budget, cc.bad_buffer_cost, cc.bad_chunk_cost,
             b.bad_buffers_max, b.good_buffers_min, r.clean_successes, r.clean_trials) +
         per_strategy + fmt("; census violations %zu", r.census_violations);
}

Outcome highrate_literal() {
  // q = n = 64, h = 2, δ = 0.25, θ = 1/160, m found by search.
  constexpr std::uint64_t q = 64;
  HighRateParams params;
  params.delta = 0.25;
  params.h = 2;
  params.theta_buf = 1.0 / 160.0;
  std::string last_error;
  std::size_t best = 0;
  for (std::size_t m = 18; m <= 64; ++m) {
    params.m = m;
    try {
      const auto spec = build_highrate_explicit(q, params);
      std::string per_strategy;
      const auto r = highrate_round_trip(spec, kHighRateTrials, 1007, per_strategy);
      return {round_trip_passed(r), round_trip_detail(spec, r, per_strategy)};
    } catch (const ConstructionFailure& e) {
      last_error = e.what();
    } catch (const ResourceLimit& e) {
      last_error = e.what();
    }
    try {
      best = std::max(best, search_dense_binary(m, params.delta, params.delta / 16, true).size());
    } catch (const Error&) {
    }
  }
  return {false, fmt("no inner table for m in [18, 64]: need 64^3 = 262144 codewords, largest found %zu; last: ",
                     best) +
                     last_error};
}

void highrate_companion() {
  // Same q = n = 64, with h = 1 and δ = 0.1 so the inner search can serve it.
  HighRateParams params;
  params.delta = 0.1;
  params.h = 1;
  params.m = 28;
  params.beta = 3.0 / 28;
  params.outer_dimension = 24;
  params.search.node_budget = 2'000'000'000;
  const auto spec = build_highrate_explicit(64, params);
  std::string per_strategy;
  const auto r = highrate_round_trip(spec, kHighRateTrials, 1107, per_strategy);
  Runner::info("high-rate companion q=n=64 h=1 delta=0.1",
               std::string(round_trip_passed(r) ? "ok " : "MISS ") + round_trip_detail(spec, r, per_strategy));
}

CodeTable concat_inner_table() {
  SearchOptions options;
  options.max_size = 64 * 64;
  options.node_budget = 2'000'000'000;
  return search_kary(8, 128, 5.0 / 8, options);
}

Outcome list_concat(const CodeTable& inner) {
  auto field = std::make_shared<const Field>(Field::of_order(64));
  const auto spec = make_concat_spec(RSCodeSpec::make(field, 2), inner, 3.0 / 8, 0.55);
  const cli::Codec codec(SpecFile{"custom", spec});
  std::mt19937_64 rng(1008);
  const std::size_t budget = spec.decode_budget();
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t low_good = 0;
  std::size_t over_bound = 0;
  std::size_t unsound = 0;
  std::size_t min_good = spec.n();
  std::size_t max_j = 0;
  std::string per_strategy;
  for (auto strategy : all_strategies()) {
    std::size_t ok = 0;
    for (std::size_t t = 0; t < kConcatTrials; ++t) {
      const Poly msg = codec.random_message(rng);
      const auto c = codec.encode(msg);
      auto ctx = codec.channel_context(msg);
      ctx.greedy_rounds = 4;
      const auto r = corrupt(c, budget, strategy, rng(), ctx);
      const std::size_t good = good_indices(spec, c, r.output);
      min_good = std::min(min_good, good);
      low_good += good < spec.agreement_threshold();
      ListDecodeTrace trace;
      try {
        ok += list_concat_decode(spec, r.output, &trace) == msg;
      } catch (const ParameterError&) {
        ++unsound;
      }
      max_j = std::max(max_j, trace.candidates);
      over_bound += trace.candidates > spec.candidate_bound();
      ++trials;
    }
    successes += ok;
    per_strategy += fmt(" %s=%zu/%zu", std::string(strategy_name(strategy)).c_str(), ok, kConcatTrials);
  }
  return {successes == trials && low_good == 0 && over_bound == 0,
          fmt("N=%zu budget=%zu threshold=%zu; min good %zu; max |J| %zu of bound %zu; unsound %zu;",
              spec.block_length(), budget, spec.agreement_threshold(), min_good, max_j, spec.candidate_bound(),
              unsound) +
              per_strategy};
}

Outcome slack_identities() {
  std::size_t violations = 0;
  double min_hn = 1;
  double min_margin = 1;
  for (std::size_t i = 1; i < kSlackSamples; ++i) {
    const double eps = 0.5 * static_cast<double>(i) / static_cast<double>(kSlackSamples);
    const double s = highnoise_slack(eps);
    const double m = highnoise_lcs_margin(eps);
    violations += !(s > 0) + !(m > 0);
    min_hn = std::min(min_hn, s);
    min_margin = std::min(min_margin, m);
  }
  double min_k = 1;
  std::size_t kary_points = 0;
  for (unsigned k = 2; k <= 10; ++k) {
    for (std::size_t i = 1; i < kSlackSamples; ++i) {
      const double eps = static_cast<double>(i) / static_cast<double>(kSlackSamples);
      if (2.0 / (k + 1) + eps >= 1) break;
      const double s = kary_slack(k, eps);
      violations += !(s > 0);
      min_k = std::min(min_k, s);
      ++kary_points;
    }
  }
  return {violations <= kAllowedMismatches,
          fmt("%zu high-noise and %zu k-ary points, %zu violations; min slacks %.3g, %.3g, %.3g", kSlackSamples - 1,
              kary_points, violations, min_hn, min_margin, min_k)};
}

Outcome determinism(const HighRateSpec& spec) {
  const cli::Codec codec(SpecFile{"highrate", spec});
  cli::ExperimentConfig config;
  config.budget_fracs = {0, 0.002, 0.01, 0.05};
  config.trials = 20;
  config.strategies = all_strategies();
  config.seed = 2024;
  std::ostringstream a;
  std::ostringstream b;
  cli::run_experiment(codec, config, a);
  cli::run_experiment(codec, config, b);
  const bool same = a.str() == b.str();
  return {same, fmt("%zu CSV bytes, %s", a.str().size(), same ? "identical" : "differ")};
}

int run() {
  Runner runner;
  runner.primary("error-kind-equivalence", error_kind_equivalence);
  runner.primary("distance-identity", distance_identity);
  runner.primary("concatenation-lcs-bound", concatenation_lcs_bound);
  runner.primary("sudan-oracle", sudan_oracle);
  runner.primary("rs-errors-erasures", rs_errors_and_erasures);

  const auto concat_inner = concat_inner_table();
  HighRateParams small;
  small.delta = 1.0 / 8;
  small.m = 22;
  small.beta = 3.0 / 22;
  small.outer_dimension = 6;
  const auto small_spec = build_highrate_explicit(16, small);
  runner.primary("inner-contracts", [&] { return inner_contracts({&concat_inner, &small_spec.inner}); });

  runner.primary("highrate-round-trip", highrate_literal);
  highrate_companion();
  runner.primary("list-concat-round-trip", [&] { return list_concat(concat_inner); });
  runner.primary("slack-identities", slack_identities);
  runner.primary("determinism", [&] { return determinism(small_spec); });
  std::printf("%d of 10 criteria failed\n", runner.failures());
  return runner.failures() == 0 ? 0 : 1;
}

}  // namespace
}  // namespace insdel

int main() { return insdel::run(); }
