#include "insdel/highrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "insdel/error.hpp"
#include "insdel/seqkit.hpp"
#include "numeric.hpp"

namespace insdel {

namespace {

std::uint64_t checked_power(std::uint64_t base, unsigned exp, const char* what) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint32_t>::max() / base) {
      throw ConstructionFailure(std::string(what) + " " + std::to_string(base) + "^" + std::to_string(exp) +
                                " exceeds 2^32");
    }
    r *= base;
  }
  return r;
}

std::size_t default_dimension(std::size_t n) {
  const std::size_t d = n - 5 * (n / 8);
  return std::max<std::size_t>(d, 1);
}

bool design_preconditions(const HighRateSpec& spec) {
  return spec.buffer_ones() == 0 && max_zero_run(spec.inner) < spec.buffer_length &&
         spec.inner.radius >= spec.inner_distance && spec.inner_distance + 1 >= spec.buffer_length;
}

}  // namespace

std::size_t HighRateSpec::buffer_ones() const {
  return detail::floor_count(theta_buf * static_cast<double>(buffer_length));
}

std::uint64_t HighRateSpec::symbol_space() const { return outer.field ? outer.field->order() : 0; }

std::size_t HighRateSpec::inner_index(std::size_t i, FieldElement value) const {
  return static_cast<std::size_t>(i * symbol_space() + value);
}

std::size_t highrate_design_budget(std::size_t n, std::size_t d) {
  if (d > n) throw InvalidInput("outer dimension exceeds block length");
  return (n - d) / 5;
}

std::size_t max_zero_run(const CodeTable& table) {
  std::size_t best = 0;
  for (const auto& w : table.codewords) {
    std::size_t run = 0;
    for (Symbol x : w) {
      run = x == 0 ? run + 1 : 0;
      best = std::max(best, run);
    }
  }
  return best;
}

HighRateSpec build_highrate_paper(double epsilon, std::uint64_t q) {
  if (!(epsilon > 0 && epsilon < kHighRateEpsilonMax)) {
    throw InvalidInput("paper mode needs 0 < eps < 1/121^2, got " + std::to_string(epsilon));
  }
  Field::of_order(q);  // validates q
  const double delta = 40.0 * std::sqrt(epsilon);
  const auto h = static_cast<unsigned>(std::min<double>(std::ceil(1.0 / epsilon - detail::kRoundingSlack),
                                                        std::numeric_limits<unsigned>::max()));
  const double index_bits = (static_cast<double>(h) + 1.0) * std::log2(static_cast<double>(q));
  throw ConstructionFailure("paper parameters delta=" + std::to_string(delta) + ", h=" + std::to_string(h) +
                            " need an outer field of order q^h=" + std::to_string(q) + "^" +
                            std::to_string(h) + " and an inner table of " + std::to_string(index_bits) +
                            " bits; m must grow beyond the search limit of 64");
}

HighRateSpec build_highrate_explicit(std::uint64_t q, const HighRateParams& params) {
  if (!(params.delta > 0 && params.delta < 0.5)) throw InvalidInput("delta must lie in (0, 1/2)");
  if (params.h == 0) throw InvalidInput("packing h must be at least 1");
  Field::of_order(q);
  const std::uint64_t table_size = checked_power(q, params.h + 1, "inner table size");
  const double beta = params.beta > 0 ? params.beta : params.delta / 16.0;
  SearchOptions options = params.search;
  options.max_size = static_cast<std::size_t>(table_size);
  CodeTable inner = search_dense_binary(params.m, params.delta, beta, true, options);
  if (inner.size() < table_size) {
    throw ConstructionFailure("inner search found " + std::to_string(inner.size()) + " of the " +
                              std::to_string(table_size) + " codewords needed at m=" +
                              std::to_string(params.m) + "; m must grow");
  }
  HighRateParams wired = params;
  wired.beta = beta;
  return assemble_highrate(q, wired, std::move(inner));
}

HighRateSpec assemble_highrate(std::uint64_t q, const HighRateParams& params, CodeTable inner) {
  if (!(params.delta > 0 && params.delta < 0.5)) throw InvalidInput("delta must lie in (0, 1/2)");
  if (!(params.theta_buf >= 0 && params.theta_buf < 1)) throw InvalidInput("theta_buf must lie in [0, 1)");
  const Field base = Field::of_order(q);
  checked_power(q, params.h, "outer field order");
  auto field = std::make_shared<const Field>(base.characteristic(), base.degree() * params.h);
  HighRateSpec spec;
  spec.q = q;
  spec.h = params.h;
  spec.n = static_cast<std::size_t>(q);
  const std::size_t d = params.outer_dimension ? params.outer_dimension : default_dimension(spec.n);
  spec.outer = RSCodeSpec::make(field, d, spec.n);
  spec.inner = std::move(inner);
  spec.delta = params.delta;
  spec.beta = params.beta > 0 ? params.beta : params.delta / 16.0;
  spec.theta_buf = params.theta_buf;
  const double dm = params.delta * static_cast<double>(spec.inner.length);
  spec.buffer_length = std::max<std::size_t>(detail::ceil_count(dm), 1);
  spec.inner_distance = detail::floor_count(dm);
  spec.design_budget = design_preconditions(spec) ? highrate_design_budget(spec.n, d) : 0;
  auto issues = highrate_issues(spec);
  if (!issues.empty()) throw InvalidInput("high-rate spec invalid: " + issues.front());
  return spec;
}

std::vector<std::string> highrate_issues(const HighRateSpec& spec) {
  std::vector<std::string> issues;
  for (auto& issue : table_issues(spec.inner)) issues.push_back("inner table: " + issue);
  if (!issues.empty()) return issues;
  if (spec.inner.alphabet_size != 2) issues.emplace_back("inner table must be binary");
  if (spec.n != spec.q) issues.emplace_back("outer block length must equal q");
  if (!spec.outer.field || spec.outer.n != spec.n) issues.emplace_back("outer code length mismatch");
  if (spec.outer.field && spec.outer.field->order() != checked_power(spec.q, spec.h, "outer field order")) {
    issues.emplace_back("outer field order must be q^h");
  }
  const std::uint64_t needed = spec.q * spec.symbol_space();
  if (spec.inner.size() != needed) {
    issues.emplace_back("inner table has " + std::to_string(spec.inner.size()) + " codewords, needs q^(h+1)=" +
                        std::to_string(needed));
  }
  for (const auto& w : spec.inner.codewords) {
    if (w.empty() || w[0] != 1 || w[w.size() - 1] != 1) {
      issues.emplace_back("inner codewords must begin and end with 1");
      break;
    }
  }
  const double span = spec.beta * static_cast<double>(spec.inner.length);
  const Density expected{std::max<std::size_t>(detail::ceil_count(span), 1), detail::ceil_count(span / 10.0)};
  if (!spec.inner.density || !(*spec.inner.density == expected)) {
    issues.emplace_back("inner density must be " + std::to_string(expected.min_ones) + " ones per " +
                        std::to_string(expected.window));
  }
  const double dm = spec.delta * static_cast<double>(spec.inner.length);
  if (spec.buffer_length != std::max<std::size_t>(detail::ceil_count(dm), 1)) {
    issues.emplace_back("buffer length must be ceil(delta*m)");
  }
  if (spec.inner_distance != detail::floor_count(dm)) issues.emplace_back("inner distance must be floor(delta*m)");
  // Otherwise the buffer scan finds buffers inside clean inner words.
  if (max_zero_run(spec.inner) >= spec.buffer_length) {
    issues.emplace_back("inner zero run " + std::to_string(max_zero_run(spec.inner)) +
                        " must be shorter than the buffer length " + std::to_string(spec.buffer_length));
  }
  if (spec.inner.radius < spec.inner_distance) {
    issues.emplace_back("inner radius " + std::to_string(spec.inner.radius) + " below floor(delta*m)=" +
                        std::to_string(spec.inner_distance));
  }
  if (spec.design_budget > 0 && !design_preconditions(spec)) {
    issues.emplace_back("design budget claimed without its preconditions");
  }
  return issues;
}

SymbolString hr_encode(const HighRateSpec& spec, const Poly& message) {
  const auto outer = rs_encode(spec.outer, message);
  SymbolString out(2);
  const SymbolString chunk = SymbolString::repeat(0, spec.buffer_length, 2);
  for (std::size_t i = 0; i < spec.n; ++i) {
    out.append(inner_encode(spec.inner, spec.inner_index(i, outer[i])));
    if (i + 1 < spec.n) out.append(chunk);
  }
  return out;
}

Layout highrate_layout(const HighRateSpec& spec) {
  Layout layout;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    layout.blocks.push_back({pos, pos + spec.m()});
    pos += spec.m();
    if (i + 1 < spec.n) {
      layout.chunks.push_back({pos, pos + spec.buffer_length});
      pos += spec.buffer_length;
    }
  }
  return layout;
}

BufferScanResult find_buffers(const SymbolString& s, std::size_t buffer_length, double theta_buf) {
  if (s.alphabet_size() != 2) throw InvalidInput("buffer scan needs a binary string");
  if (buffer_length == 0) throw InvalidInput("buffer length must be positive");
  const std::size_t limit = detail::floor_count(theta_buf * static_cast<double>(buffer_length));
  std::vector<std::size_t> ones(s.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) ones[i + 1] = ones[i] + (s[i] == 1 ? 1 : 0);
  BufferScanResult result;
  std::size_t window_start = 0;
  std::size_t pos = 0;
  while (pos + buffer_length <= s.size()) {
    if (ones[pos + buffer_length] - ones[pos] <= limit) {
      result.windows.push_back({window_start, pos});
      result.buffers.push_back({pos, pos + buffer_length});
      pos += buffer_length;
      window_start = pos;
    } else {
      ++pos;
    }
  }
  result.windows.push_back({window_start, s.size()});
  return result;
}

std::optional<Poly> hr_decode(const HighRateSpec& spec, const SymbolString& s, HighRateTrace* trace) {
  if (s.alphabet_size() != 2) throw InvalidInput("high-rate decoder needs a binary string");
  HighRateTrace local;
  HighRateTrace& t = trace ? *trace : local;
  t = HighRateTrace{};
  t.scan = find_buffers(s, spec.buffer_length, spec.theta_buf);
  const std::uint64_t space = spec.symbol_space();
  std::map<std::size_t, std::set<FieldElement>> found;
  for (const auto& w : t.scan.windows) {
    std::optional<std::pair<std::size_t, FieldElement>> pair;
    if (w.length() > 0) {
      auto idx = inner_decode(spec.inner, s.substr(w.begin, w.length()), spec.inner_distance);
      if (idx) {
        const std::size_t i = static_cast<std::size_t>(*idx / space);
        const auto value = static_cast<FieldElement>(*idx % space);
        if (i < spec.n) {
          pair.emplace(i, value);
          found[i].insert(value);
        }
      }
    }
    t.window_pairs.push_back(pair);
  }
  t.received.assign(spec.n, std::nullopt);
  for (const auto& [i, values] : found) {
    if (values.size() == 1) {
      t.received[i] = *values.begin();
    } else {
      ++t.conflicting_indices;
    }
  }
  return rs_decode_ee(spec.outer, t.received);
}

CountingConstants counting_constants(const HighRateSpec& spec) {
  const std::size_t m = spec.m();
  const std::size_t b = spec.buffer_length;
  const std::size_t thr = spec.buffer_ones();
  // A buffer spanning two chunks swallowed a whole inner word.
  const std::size_t spans_two = m + 2 > b ? m + 2 - b : 0;
  // A buffer drawn from at most 7/8 of its length in c.
  const std::size_t too_short = b - (7 * b) / 8;
  // A buffer drawing B/8 characters from an inner word must shed its ones.
  std::size_t ones_min = 0;
  if (spec.inner.density && spec.inner.density->window > 0) {
    const std::size_t part = (b + 7) / 8;
    ones_min = (part / spec.inner.density->window) * spec.inner.density->min_ones;
  }
  const std::size_t sheds_ones = ones_min > thr ? ones_min - thr : 0;
  CountingConstants c;
  c.bad_buffer_cost = std::max<std::size_t>(1, std::min({spans_two, too_short, sheds_ones}));
  const std::size_t chunk_erased = thr + 1;
  const std::size_t merged = m > b ? (m - b + 1) / 2 : 0;
  c.bad_chunk_cost = std::max<std::size_t>(1, std::min({chunk_erased, merged, c.bad_buffer_cost}));
  return c;
}

CountingBounds counting_bounds(const HighRateSpec& spec, std::size_t budget) {
  const auto c = counting_constants(spec);
  CountingBounds bounds;
  bounds.bad_buffers_max = budget / c.bad_buffer_cost;
  const std::size_t chunks = spec.n - 1;
  bounds.good_buffers_min = chunks - std::min(chunks, budget / c.bad_chunk_cost);
  return bounds;
}

BufferCensus buffer_census(const HighRateSpec& spec, const Poly& message, const SymbolString& c,
                           const SymbolString& s, const HighRateTrace& trace) {
  BufferCensus census;
  const auto layout = highrate_layout(spec);
  if (c.size() != spec.block_length()) throw InvalidInput("codeword length does not match the spec");
  std::vector<long> chunk_of(c.size(), -1);
  for (std::size_t k = 0; k < layout.chunks.size(); ++k) {
    for (std::size_t p = layout.chunks[k].begin; p < layout.chunks[k].end; ++p) chunk_of[p] = static_cast<long>(k);
  }
  std::vector<long> buffer_of(s.size(), -1);
  const auto& buffers = trace.scan.buffers;
  for (std::size_t k = 0; k < buffers.size(); ++k) {
    for (std::size_t p = buffers[k].begin; p < buffers[k].end; ++p) buffer_of[p] = static_cast<long>(k);
  }
  const auto alignment = seqkit::align(c, s);
  const std::size_t need = detail::ceil_count(spec.good_fraction * static_cast<double>(spec.buffer_length));

  for (const auto& span : buffers) {
    std::map<long, std::size_t> per_chunk;
    for (std::size_t p = span.begin; p < span.end; ++p) {
      const auto src = alignment.target_to_source[p];
      if (src >= 0 && chunk_of[static_cast<std::size_t>(src)] >= 0) ++per_chunk[chunk_of[static_cast<std::size_t>(src)]];
    }
    std::size_t best = 0;
    for (const auto& [k, count] : per_chunk) best = std::max(best, count);
    if (best >= need) {
      ++census.good_buffers;
    } else {
      ++census.bad_buffers;
    }
  }
  for (const auto& span : layout.chunks) {
    std::map<long, std::size_t> per_buffer;
    for (std::size_t p = span.begin; p < span.end; ++p) {
      const auto dst = alignment.source_to_target[p];
      if (dst >= 0 && buffer_of[static_cast<std::size_t>(dst)] >= 0) ++per_buffer[buffer_of[static_cast<std::size_t>(dst)]];
    }
    std::size_t best = 0;
    for (const auto& [k, count] : per_buffer) best = std::max(best, count);
    if (best >= need) {
      ++census.good_chunks;
    } else {
      ++census.bad_chunks;
    }
  }
  const auto truth = rs_encode(spec.outer, message);
  for (std::size_t i = 0; i < spec.n && i < trace.received.size(); ++i) {
    if (!trace.received[i]) {
      ++census.erased;
    } else if (*trace.received[i] == truth[i]) {
      ++census.correct_pairs;
    } else {
      ++census.wrong_pairs;
    }
  }
  return census;
}

RateBreakdown highrate_rate(const HighRateSpec& spec) {
  RateBreakdown r;
  const double n = static_cast<double>(spec.n);
  const double m = static_cast<double>(spec.m());
  const double big_n = static_cast<double>(spec.block_length());
  r.outer_rate = static_cast<double>(spec.outer.d) / n;
  r.packing = static_cast<double>(spec.h) / (static_cast<double>(spec.h) + 1.0);
  r.inner_rate = spec.inner.rate();
  r.buffer_factor = n * m / big_n;
  r.achieved = static_cast<double>(spec.outer.d) * static_cast<double>(spec.h) *
               std::log2(static_cast<double>(spec.q)) / big_n;
  return r;
}

}  // namespace insdel
