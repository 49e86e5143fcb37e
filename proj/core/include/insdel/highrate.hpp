#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "insdel/innersearch.hpp"
#include "insdel/layout.hpp"
#include "insdel/poly.hpp"
#include "insdel/rs.hpp"
#include "insdel/symbol_string.hpp"

namespace insdel {

inline constexpr double kHighRateEpsilonMax = 1.0 / (121.0 * 121.0);
inline constexpr double kDefaultBufferOnes = 1.0 / 160.0;
inline constexpr double kGoodBufferFraction = 0.75;

/// Explicit-mode parameters of the buffered construction.
struct HighRateParams {
  double delta = 0.25;
  std::size_t m = 16;
  unsigned h = 1;
  double theta_buf = kDefaultBufferOnes;
  /// Density interval as a fraction of m; 0 selects delta/16.
  double beta = 0.0;
  /// RS dimension d; 0 selects n - 5·⌊n/8⌋.
  std::size_t outer_dimension = 0;
  SearchOptions search;
};

/// Binary code: RS over GF(q^h) with n = q, each coordinate c_i tagged with
/// its index i and inner-encoded, inner words separated by B zeros.
struct HighRateSpec {
  std::uint64_t q = 0;
  unsigned h = 1;
  std::size_t n = 0;
  RSCodeSpec outer;
  CodeTable inner;
  double delta = 0;
  double beta = 0;
  double theta_buf = kDefaultBufferOnes;
  double good_fraction = kGoodBufferFraction;
  /// Chunk and buffer length ⌈δm⌉.
  std::size_t buffer_length = 0;
  /// Inner decoding distance ⌊δm⌋.
  std::size_t inner_distance = 0;
  /// Edits every received word within distance is guaranteed to survive.
  std::size_t design_budget = 0;
  bool paper_mode = false;

  std::size_t m() const noexcept { return inner.length; }
  /// n·m + (n-1)·B.
  std::size_t block_length() const noexcept { return n * m() + (n - 1) * buffer_length; }
  /// Largest number of ones a detected buffer may hold: ⌊θ·B⌋.
  std::size_t buffer_ones() const;
  std::size_t inner_index(std::size_t i, FieldElement value) const;
  std::uint64_t symbol_space() const;  // q^h
};

/// Paper parameters: 0 < ε < 1/121², δ = 40√ε, h = ⌈1/ε⌉.
HighRateSpec build_highrate_paper(double epsilon, std::uint64_t q);
/// Searches an inner table and wires the remaining parameters.
HighRateSpec build_highrate_explicit(std::uint64_t q, const HighRateParams& params);
/// Wires a spec around a given inner table, verifying every invariant.
HighRateSpec assemble_highrate(std::uint64_t q, const HighRateParams& params, CodeTable inner);

/// Edits the decoder provably survives: ⌊(n - d)/5⌋. Valid when ⌊θB⌋ = 0,
/// inner zero runs are shorter than B and the inner radius is at least ⌊δm⌋.
std::size_t highrate_design_budget(std::size_t n, std::size_t d);

/// Failed invariants of a spec; empty when consistent.
std::vector<std::string> highrate_issues(const HighRateSpec& spec);

/// Longest run of zeros inside any inner codeword.
std::size_t max_zero_run(const CodeTable& table);

SymbolString hr_encode(const HighRateSpec& spec, const Poly& message);

Layout highrate_layout(const HighRateSpec& spec);

struct BufferScanResult {
  std::vector<Span> buffers;
  std::vector<Span> windows;
};

/// Greedy left-to-right scan for length-B windows holding at most ⌊θ·B⌋ ones.
BufferScanResult find_buffers(const SymbolString& s, std::size_t buffer_length, double theta_buf);

struct HighRateTrace {
  BufferScanResult scan;
  /// (index, value) recovered per window, if any.
  std::vector<std::optional<std::pair<std::size_t, FieldElement>>> window_pairs;
  std::size_t conflicting_indices = 0;
  ReceivedWord received;
};

std::optional<Poly> hr_decode(const HighRateSpec& spec, const SymbolString& s,
                              HighRateTrace* trace = nullptr);

/// Minimum edit cost of one bad buffer (c_b) and of one bad chunk (c_c),
/// evaluated on the integer parameters and floored at 1.
struct CountingConstants {
  std::size_t bad_buffer_cost = 1;
  std::size_t bad_chunk_cost = 1;
};

CountingConstants counting_constants(const HighRateSpec& spec);

struct CountingBounds {
  std::size_t bad_buffers_max = 0;
  std::size_t good_buffers_min = 0;
};

/// Bounds implied by the counting constants for `budget` edits.
CountingBounds counting_bounds(const HighRateSpec& spec, std::size_t budget);

/// Good/bad classification of buffers and chunks under the canonical
/// (leftmost LCS) alignment of codeword c with received word s.
struct BufferCensus {
  std::size_t good_buffers = 0;
  std::size_t bad_buffers = 0;
  std::size_t good_chunks = 0;
  std::size_t bad_chunks = 0;
  std::size_t correct_pairs = 0;
  std::size_t wrong_pairs = 0;
  std::size_t erased = 0;
};

BufferCensus buffer_census(const HighRateSpec& spec, const Poly& message, const SymbolString& c,
                           const SymbolString& s, const HighRateTrace& trace);

struct RateBreakdown {
  double outer_rate = 0;
  double packing = 0;
  double inner_rate = 0;
  double buffer_factor = 0;
  double achieved = 0;
};

/// Rate factors; `achieved` is log|C| / N computed directly.
RateBreakdown highrate_rate(const HighRateSpec& spec);

}  // namespace insdel
