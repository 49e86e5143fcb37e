#include "insdel/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "insdel/error.hpp"
#include "insdel/seqkit.hpp"
#include "numeric.hpp"

namespace insdel {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::size_t outer_dimension(std::size_t requested, double rate, std::size_t n) {
  if (requested) return requested;
  return std::max<std::size_t>(1, detail::ceil_count(rate * static_cast<double>(n)));
}

std::size_t table_target(std::uint64_t q) {
  if (q > 65536) throw InvalidInput("field order too large for a q^2-entry inner table");
  return static_cast<std::size_t>(q * q);
}

ConcatCodeSpec finish(std::shared_ptr<const Field> field, std::size_t d, CodeTable inner, double delta,
                      double gamma, BuildMode mode) {
  const std::size_t n = static_cast<std::size_t>(field->order());
  if (d > n) throw InvalidInput("outer dimension " + std::to_string(d) + " exceeds n=" + std::to_string(n));
  const double g = gamma > 0 ? gamma : paper_gamma(static_cast<double>(d) / static_cast<double>(n));
  ConcatCodeSpec spec{RSCodeSpec::make(std::move(field), d, n), std::move(inner), delta, g};
  auto issues = concat_issues(spec);
  if (!issues.empty()) {
    if (mode == BuildMode::Paper) {
      throw ConstructionFailure("paper parameters do not fit at q=" + std::to_string(n) + ": " + issues.front());
    }
    throw InvalidInput("concatenated spec invalid: " + issues.front());
  }
  return spec;
}

// Table of exactly `size` words over [k] with insdel fraction `fraction`, or
// nullopt when the search comes up short or runs out of budget.
std::optional<CodeTable> try_search(std::size_t m, unsigned k, double fraction, std::size_t size,
                                    const SearchOptions& base) {
  SearchOptions options = base;
  options.max_size = size;
  try {
    CodeTable t = search_kary(m, k, fraction, options);
    if (t.size() >= size) return t;
  } catch (const ConstructionFailure&) {
  } catch (const ResourceLimit&) {
  }
  return std::nullopt;
}

}  // namespace

double highnoise_slack(double epsilon) {
  return (1.0 - epsilon / 4.0 - 4.0 * std::pow(std::pow(epsilon / 8.0, 4.0), 0.25)) - (1.0 - epsilon);
}

double kary_slack(unsigned k, double epsilon) {
  const double gamma = 2.0 * std::pow(epsilon / 5.0, 4.0);
  const double base = 1.0 - 2.0 / (static_cast<double>(k) + 1.0);
  return (base - gamma / 4.0 - 4.0 * std::pow(gamma / 2.0, 0.25)) - (base - epsilon);
}

double highnoise_lcs_margin(double epsilon) {
  return epsilon - (std::pow(epsilon / 8.0, 4.0) + 2.0 * epsilon / 4.0);
}

ConcatCodeSpec build_highnoise(double epsilon, std::uint64_t q, BuildMode mode, const ConcatParams& params) {
  if (mode == BuildMode::Paper && !(epsilon > 0 && epsilon < 0.5)) {
    throw InvalidInput("paper mode needs 0 < eps < 1/2, got " + num(epsilon));
  }
  if (!(epsilon > 0 && epsilon < 1)) throw InvalidInput("eps must lie in (0, 1), got " + num(epsilon));
  auto field = std::make_shared<const Field>(Field::of_order(q));
  const std::size_t n = static_cast<std::size_t>(q);
  const std::size_t size = table_target(q);
  const double outer_rate = std::pow(epsilon / 8.0, 4.0);

  if (mode == BuildMode::Paper) {
    const double k_real = std::ceil(4096.0 / (epsilon * epsilon * epsilon) - detail::kRoundingSlack);
    const std::size_t m = detail::ceil_count(24.0 * std::log2(static_cast<double>(q)) / epsilon);
    if (m > 64 || k_real > 4294967295.0) {
      throw ConstructionFailure("paper parameters k=" + num(k_real) + ", m=" + std::to_string(m) +
                                " exceed the inner search limits (m <= 64)");
    }
    const auto k = static_cast<unsigned>(k_real);
    auto inner = try_search(m, k, 1.0 - epsilon / 4.0, size, params.search);
    if (!inner) {
      throw ConstructionFailure("inner search at k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                                " found fewer than q^2=" + std::to_string(size) + " codewords");
    }
    return finish(field, outer_dimension(0, outer_rate, n), std::move(*inner), epsilon / 4.0, 0, mode);
  }

  const double fraction = params.inner_fraction > 0 ? params.inner_fraction : 1.0 - epsilon / 4.0;
  auto inner = try_search(params.m, params.k, fraction, size, params.search);
  if (!inner) {
    throw ConstructionFailure("inner search at k=" + std::to_string(params.k) + ", m=" + std::to_string(params.m) +
                              " found fewer than q^2=" + std::to_string(size) + " codewords with fraction " +
                              num(fraction));
  }
  return finish(field, outer_dimension(params.outer_dimension, outer_rate, n), std::move(*inner), 1.0 - fraction,
                params.gamma, mode);
}

ConcatCodeSpec build_kary(unsigned k, double epsilon, std::uint64_t q, BuildMode mode, const ConcatParams& params) {
  if (k < 2) throw InvalidInput("alphabet size must be at least 2");
  if (!(epsilon > 0)) throw InvalidInput("eps must be positive");
  const double floor_fraction = 2.0 / (static_cast<double>(k) + 1.0);
  if (!(floor_fraction + epsilon < 1)) {
    throw InvalidInput("2/(k+1) + eps must stay below 1, got " + num(floor_fraction + epsilon));
  }
  if (!(kary_slack(k, epsilon) > 0)) throw ConstructionFailure("slack inequality fails at eps=" + num(epsilon));
  auto field = std::make_shared<const Field>(Field::of_order(q));
  const std::size_t n = static_cast<std::size_t>(q);
  const std::size_t size = table_target(q);
  const double gamma_inner = 2.0 * std::pow(epsilon / 5.0, 4.0);
  const double target = 1.0 - floor_fraction - gamma_inner / 4.0;
  const std::size_t d = outer_dimension(mode == BuildMode::Explicit ? params.outer_dimension : 0, gamma_inner / 2.0, n);

  if (mode == BuildMode::Paper) {
    std::size_t m = 1;
    while (std::pow(static_cast<double>(k), static_cast<double>(m)) < static_cast<double>(size)) ++m;
    for (; m <= 64; ++m) {
      if (auto inner = try_search(m, k, target, size, params.search)) {
        return finish(field, d, std::move(*inner), 1.0 - target, 0, mode);
      }
    }
    throw ConstructionFailure("no inner length up to 64 reaches fraction " + num(target) + " with q^2=" +
                              std::to_string(size) + " codewords");
  }

  const double fraction = params.inner_fraction > 0 ? params.inner_fraction : target;
  if (auto inner = try_search(params.m, k, fraction, size, params.search)) {
    return finish(field, d, std::move(*inner), 1.0 - fraction, params.gamma, mode);
  }
  std::string best = "none";
  for (std::size_t lcs = max_lcs_for_fraction(params.m, fraction) + 1; lcs < params.m; ++lcs) {
    const double f = static_cast<double>(params.m - lcs - 1) / static_cast<double>(params.m);
    if (f <= 0) break;
    if (try_search(params.m, k, f, size, params.search)) {
      best = num(f);
      break;
    }
  }
  throw ConstructionFailure("inner search at k=" + std::to_string(k) + ", m=" + std::to_string(params.m) +
                            " cannot reach fraction " + num(fraction) + "; largest achievable " + best);
}

SymbolString concatenate(const SymbolString& outer_word, const std::vector<SymbolString>& inner) {
  if (inner.empty()) throw InvalidInput("inner code is empty");
  SymbolString out(inner.front().alphabet_size());
  for (Symbol x : outer_word) {
    if (x >= inner.size()) throw InvalidInput("outer symbol outside the inner code");
    out.append(inner[x]);
  }
  return out;
}

Lemma5Result lemma5_exhaustive(const std::vector<SymbolString>& outer, const std::vector<SymbolString>& inner) {
  if (outer.empty() || inner.empty()) throw InvalidInput("codes must be nonempty");
  Lemma5Result r;
  r.lcs_outer = seqkit::lcs_of_code(outer);
  r.lcs_inner = seqkit::lcs_of_code(inner);
  const std::size_t n = outer.front().size();
  const std::size_t m = inner.front().size();
  r.bound = r.lcs_outer * m + 2 * r.lcs_inner * n;
  std::vector<SymbolString> code;
  code.reserve(outer.size());
  for (const auto& w : outer) code.push_back(concatenate(w, inner));
  for (std::size_t i = 0; i < code.size(); ++i) {
    const seqkit::LcsPattern pattern(code[i]);
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      if (outer[i] == outer[j]) continue;
      ++r.pairs;
      const std::size_t l = pattern.lcs(code[j]);
      r.lcs_code = std::max(r.lcs_code, l);
      if (l > r.bound) ++r.violations;
    }
  }
  return r;
}

bool RegimeReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RegimeCheck& c) { return c.passed; });
}

namespace {

RegimeCheck check_issues(std::string name, const std::vector<std::string>& issues) {
  return {std::move(name), issues.empty(), issues.empty() ? "" : issues.front()};
}

// Messages to compare: all of them when few enough, else random pairs.
struct MessagePairs {
  std::vector<Poly> messages;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool exhaustive = false;
};

MessagePairs message_pairs(const Field& f, std::size_t d, const VerifyEffort& effort) {
  MessagePairs mp;
  const double count = std::pow(static_cast<double>(f.order()), static_cast<double>(d));
  if (count <= static_cast<double>(effort.exhaustive_limit)) {
    mp.exhaustive = true;
    const auto total = static_cast<std::uint64_t>(count);
    for (std::uint64_t i = 0; i < total; ++i) mp.messages.push_back(poly_from_index(f, i, d));
    for (std::size_t i = 0; i < mp.messages.size(); ++i) {
      for (std::size_t j = i + 1; j < mp.messages.size(); ++j) mp.pairs.emplace_back(i, j);
    }
    return mp;
  }
  std::mt19937_64 rng(effort.seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, f.order() - 1);
  auto random_poly = [&] {
    std::vector<FieldElement> c(d);
    for (auto& x : c) x = static_cast<FieldElement>(coeff(rng));
    return Poly(std::move(c));
  };
  for (std::size_t s = 0; s < effort.sampled_pairs; ++s) {
    Poly a = random_poly();
    Poly b = random_poly();
    while (b == a) b = random_poly();
    mp.messages.push_back(std::move(a));
    mp.messages.push_back(std::move(b));
    mp.pairs.emplace_back(2 * s, 2 * s + 1);
  }
  return mp;
}

}  // namespace

RegimeReport verify_code(const ConcatCodeSpec& spec, const VerifyEffort& effort, const std::string& regime) {
  RegimeReport report;
  report.regime = regime;
  const std::size_t n = spec.n();
  const std::size_t m = spec.m();
  const std::size_t big_n = spec.block_length();
  const std::size_t q = spec.outer.field ? static_cast<std::size_t>(spec.outer.field->order()) : 0;
  report.params = {{"q", std::to_string(q)},
                   {"n", std::to_string(n)},
                   {"d", std::to_string(spec.outer.d)},
                   {"k", std::to_string(spec.inner.alphabet_size)},
                   {"m", std::to_string(m)},
                   {"N", std::to_string(big_n)},
                   {"delta", num(spec.delta)},
                   {"gamma", num(spec.gamma)},
                   {"inner_size", std::to_string(spec.inner.size())},
                   {"inner_radius", std::to_string(spec.inner.radius)}};

  report.checks.push_back(check_issues("inner-radius", table_issues(spec.inner)));
  const auto issues = concat_issues(spec);
  report.checks.push_back(check_issues("spec-invariants", issues));
  if (!spec.outer.field || spec.inner.size() < q * q || m == 0) {
    report.checks.push_back({"lemma5", false, "spec too broken to encode"});
    return report;
  }
  report.params.emplace_back("decode_budget", std::to_string(spec.decode_budget()));
  report.params.emplace_back("threshold", std::to_string(spec.agreement_threshold()));
  report.params.emplace_back("candidate_bound", std::to_string(spec.candidate_bound()));
  report.rate = static_cast<double>(spec.outer.d) * std::log2(static_cast<double>(q)) /
                (static_cast<double>(big_n) * std::log2(static_cast<double>(spec.inner.alphabet_size)));

  const std::size_t lcs_inner = seqkit::lcs_of_code(spec.inner.codewords);
  const auto mp = message_pairs(*spec.outer.field, spec.outer.d, effort);
  std::size_t lcs_outer = spec.outer.d - 1;
  if (mp.exhaustive) {
    std::vector<SymbolString> outer;
    const auto outer_k = static_cast<unsigned>(q * q);
    for (const auto& p : mp.messages) {
      const auto word = rs_encode(spec.outer, p);
      SymbolString tagged(outer_k);
      for (std::size_t i = 0; i < n; ++i) tagged.push_back(static_cast<Symbol>(spec.inner_index(spec.outer.point(i), word[i])));
      outer.push_back(std::move(tagged));
    }
    lcs_outer = seqkit::lcs_of_code(outer);
  }
  const std::size_t bound = lcs_outer * m + 2 * lcs_inner * n;
  std::vector<SymbolString> code;
  code.reserve(mp.messages.size());
  for (const auto& p : mp.messages) code.push_back(concat_encode(spec, p));
  std::size_t worst = 0;
  std::size_t violations = 0;
  for (auto [i, j] : mp.pairs) {
    const std::size_t l = seqkit::lcs(code[i], code[j]);
    worst = std::max(worst, l);
    if (l > bound) ++violations;
  }
  report.params.emplace_back("lcs_outer", std::to_string(lcs_outer));
  report.params.emplace_back("lcs_inner", std::to_string(lcs_inner));
  report.params.emplace_back("lemma5_bound", std::to_string(bound));
  report.params.emplace_back("lcs_observed", std::to_string(worst));
  report.params.emplace_back("pairs", std::to_string(mp.pairs.size()) + (mp.exhaustive ? " exhaustive" : " sampled"));
  report.checks.push_back({"lemma5", violations == 0,
                           violations ? std::to_string(violations) + " pairs exceed " + std::to_string(bound) : ""});

  // Decodable under the decoder's budget t iff LCS(C) <= N - t - 1.
  const std::size_t budget = spec.decode_budget();
  const bool radius_ok = bound + budget + 1 <= big_n;
  report.checks.push_back({"combinatorial-radius", radius_ok,
                           radius_ok ? "" : "bound " + std::to_string(bound) + " leaves no room for " +
                                                std::to_string(budget) + " edits"});
  if (radius_ok && issues.empty()) report.claimed_fraction = static_cast<double>(budget) / static_cast<double>(big_n);
  return report;
}

RegimeReport verify_code(const HighRateSpec& spec, const VerifyEffort& effort) {
  RegimeReport report;
  report.regime = "highrate";
  const std::size_t big_n = spec.block_length();
  report.params = {{"q", std::to_string(spec.q)},
                   {"h", std::to_string(spec.h)},
                   {"n", std::to_string(spec.n)},
                   {"d", std::to_string(spec.outer.d)},
                   {"m", std::to_string(spec.m())},
                   {"N", std::to_string(big_n)},
                   {"delta", num(spec.delta)},
                   {"buffer_length", std::to_string(spec.buffer_length)},
                   {"inner_size", std::to_string(spec.inner.size())},
                   {"inner_radius", std::to_string(spec.inner.radius)},
                   {"design_budget", std::to_string(spec.design_budget)}};
  report.checks.push_back(check_issues("inner-radius", table_issues(spec.inner)));
  const auto issues = highrate_issues(spec);
  report.checks.push_back(check_issues("spec-invariants", issues));
  if (!issues.empty()) return report;

  const bool pre = spec.buffer_ones() == 0 && max_zero_run(spec.inner) < spec.buffer_length &&
                   spec.inner.radius >= spec.inner_distance && spec.inner_distance + 1 >= spec.buffer_length;
  const std::size_t expected = pre ? (spec.n - spec.outer.d) / 5 : 0;
  report.checks.push_back({"design-budget", spec.design_budget == expected,
                           spec.design_budget == expected ? "" : "expected " + std::to_string(expected)});

  const auto rate = highrate_rate(spec);
  report.rate = rate.achieved;
  const double product = rate.outer_rate * rate.packing * rate.inner_rate * rate.buffer_factor;
  const bool identity = std::abs(product - rate.achieved) <= 1e-12 * std::max(1.0, rate.achieved);
  report.checks.push_back({"rate-identity", identity, identity ? "" : "product " + num(product)});

  const auto mp = message_pairs(*spec.outer.field, spec.outer.d, effort);
  std::vector<SymbolString> code;
  for (const auto& p : mp.messages) code.push_back(hr_encode(spec, p));
  std::size_t worst = 0;
  for (auto [i, j] : mp.pairs) worst = std::max(worst, seqkit::lcs(code[i], code[j]));
  report.params.emplace_back("lcs_observed", std::to_string(worst));
  report.params.emplace_back("pairs", std::to_string(mp.pairs.size()) + (mp.exhaustive ? " exhaustive" : " sampled"));
  const bool separated = worst + spec.design_budget + 1 <= big_n;
  report.checks.push_back({"pairwise-lcs", separated, separated ? "" : "observed LCS " + std::to_string(worst)});
  if (separated && spec.design_budget > 0) {
    report.claimed_fraction = static_cast<double>(spec.design_budget) / static_cast<double>(big_n);
  }
  return report;
}

void write_report(std::ostream& out, const RegimeReport& report) {
  out << "regime=" << report.regime << '\n';
  for (const auto& [k, v] : report.params) out << k << '=' << v << '\n';
  out << "rate=" << num(report.rate) << '\n';
  out << "claimed_fraction=" << num(report.claimed_fraction) << '\n';
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
}

}  // namespace insdel
