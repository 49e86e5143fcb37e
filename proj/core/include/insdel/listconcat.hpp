#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "insdel/innersearch.hpp"
#include "insdel/layout.hpp"
#include "insdel/poly.hpp"
#include "insdel/rs.hpp"
#include "insdel/symbol_string.hpp"

namespace insdel {

/// RS over GF(q) with n = q, each coordinate (α, p(α)) inner-encoded through
/// a table of q² words indexed by α·q + β. The inner code corrects a 1 - δ
/// fraction of insertions/deletions; γ is the decoder's slack.
struct ConcatCodeSpec {
  RSCodeSpec outer;
  CodeTable inner;
  double delta = 0;
  double gamma = 0;

  std::size_t q() const noexcept { return outer.n; }
  std::size_t n() const noexcept { return outer.n; }
  std::size_t m() const noexcept { return inner.length; }
  std::size_t block_length() const noexcept { return n() * m(); }
  std::size_t inner_index(FieldElement alpha, FieldElement beta) const { return alpha * q() + beta; }

  /// ⌊(1-δ)m⌋
  std::size_t inner_distance() const;
  /// ⌊γm/2⌋, at least 1.
  std::size_t window_step() const;
  /// ⌈2n/γ⌉
  std::size_t window_starts() const;
  /// ⌈4/γ⌉
  std::size_t window_spans() const;
  /// ⌈γn/2⌉
  std::size_t agreement_threshold() const;
  /// ⌊(1-δ-γ)N⌋
  std::size_t decode_budget() const;
  /// ⌈2n/γ⌉·⌈4/γ⌉
  std::size_t candidate_bound() const;
};

/// γ = 4·r^(1/4)
double paper_gamma(double rate);

/// Validates and wires a spec. Throws InvalidInput on a broken invariant.
ConcatCodeSpec make_concat_spec(RSCodeSpec outer, CodeTable inner, double delta, double gamma);

std::vector<std::string> concat_issues(const ConcatCodeSpec& spec);

SymbolString concat_encode(const ConcatCodeSpec& spec, const Poly& message);

Layout concat_layout(const ConcatCodeSpec& spec);

struct SweepStats {
  std::size_t windows = 0;
  std::size_t distinct_windows = 0;
  std::size_t unique_hits = 0;
  std::size_t ambiguous = 0;
};

CandidateSet window_sweep(const ConcatCodeSpec& spec, const SymbolString& s, SweepStats* stats = nullptr);

struct ListDecodeTrace {
  SweepStats sweep;
  std::size_t candidates = 0;
  std::size_t list_size = 0;
  std::size_t qualifying = 0;
};

/// Window sweep, Sudan list decoding at ⌈γn/2⌉, then the unique list member
/// within ⌊(1-δ-γ)N⌋ of s. Throws ParameterError if the Sudan threshold is
/// unsound for the harvested set, ContractViolation if several members qualify.
std::optional<Poly> list_concat_decode(const ConcatCodeSpec& spec, const SymbolString& s,
                                       ListDecodeTrace* trace = nullptr);

/// Per-block edit cost under the canonical alignment of c with s: the blocks
/// of c induce a partition of s and each part is charged its own distance.
std::vector<std::size_t> block_costs(const SymbolString& c, const SymbolString& s,
                                     const std::vector<Span>& blocks);

/// Blocks whose cost is at most (1-δ-γ/2)m.
std::size_t good_indices(const ConcatCodeSpec& spec, const SymbolString& c, const SymbolString& s);

}  // namespace insdel
