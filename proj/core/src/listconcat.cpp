#include "insdel/listconcat.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "insdel/error.hpp"
#include "insdel/seqkit.hpp"
#include "numeric.hpp"

namespace insdel {

std::size_t ConcatCodeSpec::inner_distance() const {
  return detail::floor_count((1.0 - delta) * static_cast<double>(m()));
}

std::size_t ConcatCodeSpec::window_step() const {
  return std::max<std::size_t>(1, detail::floor_count(gamma * static_cast<double>(m()) / 2.0));
}

std::size_t ConcatCodeSpec::window_starts() const {
  return detail::ceil_count(2.0 * static_cast<double>(n()) / gamma);
}

std::size_t ConcatCodeSpec::window_spans() const { return std::max<std::size_t>(1, detail::ceil_count(4.0 / gamma)); }

std::size_t ConcatCodeSpec::agreement_threshold() const {
  return detail::ceil_count(gamma * static_cast<double>(n()) / 2.0);
}

std::size_t ConcatCodeSpec::decode_budget() const {
  return detail::floor_count((1.0 - delta - gamma) * static_cast<double>(block_length()));
}

std::size_t ConcatCodeSpec::candidate_bound() const { return window_starts() * window_spans(); }

double paper_gamma(double rate) {
  if (!(rate > 0 && rate <= 1)) throw InvalidInput("rate must lie in (0, 1]");
  return 4.0 * std::pow(rate, 0.25);
}

std::vector<std::string> concat_issues(const ConcatCodeSpec& spec) {
  std::vector<std::string> issues;
  for (auto& issue : table_issues(spec.inner)) issues.push_back("inner table: " + issue);
  if (!issues.empty()) return issues;
  if (!spec.outer.field) {
    issues.emplace_back("outer code has no field");
    return issues;
  }
  const std::uint64_t q = spec.outer.field->order();
  if (spec.outer.n != q) issues.emplace_back("outer block length must equal the field order");
  if (spec.outer.d == 0 || spec.outer.d > spec.outer.n) issues.emplace_back("outer dimension out of range");
  if (spec.inner.size() != q * q) {
    issues.emplace_back("inner table has " + std::to_string(spec.inner.size()) + " codewords, needs q^2=" +
                        std::to_string(q * q));
  }
  if (!(spec.delta > 0 && spec.delta < 1)) issues.emplace_back("delta must lie in (0, 1)");
  if (!(spec.gamma > 0)) issues.emplace_back("gamma must be positive");
  if (spec.delta + spec.gamma >= 1) issues.emplace_back("delta + gamma must stay below 1");
  if (issues.empty() && spec.inner.radius < spec.inner_distance()) {
    issues.emplace_back("inner radius " + std::to_string(spec.inner.radius) + " below floor((1-delta)m)=" +
                        std::to_string(spec.inner_distance()));
  }
  return issues;
}

ConcatCodeSpec make_concat_spec(RSCodeSpec outer, CodeTable inner, double delta, double gamma) {
  outer.validate();
  ConcatCodeSpec spec{std::move(outer), std::move(inner), delta, gamma};
  auto issues = concat_issues(spec);
  if (!issues.empty()) throw InvalidInput("concatenated spec invalid: " + issues.front());
  return spec;
}

SymbolString concat_encode(const ConcatCodeSpec& spec, const Poly& message) {
  const auto outer = rs_encode(spec.outer, message);
  SymbolString out(spec.inner.alphabet_size);
  for (std::size_t i = 0; i < spec.n(); ++i) {
    out.append(inner_encode(spec.inner, spec.inner_index(spec.outer.point(i), outer[i])));
  }
  return out;
}

Layout concat_layout(const ConcatCodeSpec& spec) {
  Layout layout;
  for (std::size_t i = 0; i < spec.n(); ++i) layout.blocks.push_back({i * spec.m(), (i + 1) * spec.m()});
  return layout;
}

CandidateSet window_sweep(const ConcatCodeSpec& spec, const SymbolString& s, SweepStats* stats) {
  if (s.alphabet_size() != spec.inner.alphabet_size) throw InvalidInput("received word alphabet mismatch");
  SweepStats local;
  SweepStats& st = stats ? *stats : local;
  st = SweepStats{};
  const std::size_t step = spec.window_step();
  const std::size_t starts = std::max(spec.window_starts(), (s.size() + step - 1) / step);
  const std::size_t spans = spec.window_spans();
  const std::size_t q = spec.q();
  const std::size_t radius = spec.inner_distance();

  CandidateSet j;
  std::map<std::vector<Symbol>, std::optional<std::size_t>> cache;
  for (std::size_t a = 0; a < starts; ++a) {
    const std::size_t begin = a * step;
    if (begin >= s.size()) break;
    std::size_t last_end = begin;
    for (std::size_t b = 1; b <= spans; ++b) {
      const std::size_t end = std::min(s.size(), (a + b) * step);
      if (end == last_end) break;
      last_end = end;
      ++st.windows;
      std::vector<Symbol> key(s.view().begin() + static_cast<std::ptrdiff_t>(begin),
                              s.view().begin() + static_cast<std::ptrdiff_t>(end));
      auto it = cache.find(key);
      if (it == cache.end()) {
        ++st.distinct_windows;
        auto idx = inner_decode(spec.inner, SymbolString(key, s.alphabet_size()), radius);
        if (!idx) ++st.ambiguous;
        it = cache.emplace(std::move(key), idx).first;
      }
      if (it->second) {
        ++st.unique_hits;
        j.insert(static_cast<FieldElement>(*it->second / q), static_cast<FieldElement>(*it->second % q));
      }
    }
  }
  return j;
}

std::optional<Poly> list_concat_decode(const ConcatCodeSpec& spec, const SymbolString& s, ListDecodeTrace* trace) {
  ListDecodeTrace local;
  ListDecodeTrace& t = trace ? *trace : local;
  t = ListDecodeTrace{};
  const CandidateSet j = window_sweep(spec, s, &t.sweep);
  t.candidates = j.size();
  if (j.empty()) return std::nullopt;
  const std::size_t threshold = spec.agreement_threshold();
  if (!sudan_threshold_sound(spec.outer.d, j.size(), threshold)) {
    throw ParameterError("agreement threshold " + std::to_string(threshold) + " is unsound for |J|=" +
                         std::to_string(j.size()) + " and d=" + std::to_string(spec.outer.d));
  }
  const auto list = sudan_list_decode(spec.outer, j, threshold);
  t.list_size = list.size();
  const std::size_t budget = spec.decode_budget();
  std::optional<Poly> chosen;
  for (const auto& p : list) {
    if (seqkit::insdel_distance(concat_encode(spec, p), s) > budget) continue;
    ++t.qualifying;
    if (!chosen) chosen = p;
  }
  if (t.qualifying > 1) {
    throw ContractViolation(std::to_string(t.qualifying) + " list members lie within distance " +
                            std::to_string(budget) + " of the received word");
  }
  return chosen;
}

std::vector<std::size_t> block_costs(const SymbolString& c, const SymbolString& s, const std::vector<Span>& blocks) {
  if (blocks.empty()) return {};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::size_t expected = i == 0 ? 0 : blocks[i - 1].end;
    if (blocks[i].begin != expected || blocks[i].end < blocks[i].begin) {
      throw InvalidInput("blocks must tile the codeword");
    }
  }
  if (blocks.back().end != c.size()) throw InvalidInput("blocks must tile the codeword");
  const auto alignment = seqkit::align(c, s);
  // Received-word boundary of block i: just past the last character matched
  // from anything before it.
  std::vector<std::size_t> bound(blocks.size() + 1, 0);
  std::size_t reach = 0;
  std::size_t src = 0;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    for (; src < blocks[i].begin; ++src) {
      const auto dst = alignment.source_to_target[src];
      if (dst >= 0) reach = std::max(reach, static_cast<std::size_t>(dst) + 1);
    }
    bound[i] = reach;
  }
  bound[blocks.size()] = s.size();
  std::vector<std::size_t> costs;
  costs.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto piece = s.substr(bound[i], bound[i + 1] - bound[i]);
    costs.push_back(seqkit::insdel_distance(c.substr(blocks[i].begin, blocks[i].length()), piece));
  }
  return costs;
}

std::size_t good_indices(const ConcatCodeSpec& spec, const SymbolString& c, const SymbolString& s) {
  const auto costs = block_costs(c, s, concat_layout(spec).blocks);
  const std::size_t limit =
      detail::floor_count((1.0 - spec.delta - spec.gamma / 2.0) * static_cast<double>(spec.m()));
  return static_cast<std::size_t>(std::count_if(costs.begin(), costs.end(), [&](std::size_t x) { return x <= limit; }));
}

}  // namespace insdel
