#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "insdel/symbol_string.hpp"

namespace insdel::seqkit {

/// Length of the longest common subsequence.
///
/// O(|a|·|b|) time and O(min(|a|,|b|)) working memory. Alphabets up to 256
/// symbols run the bit-parallel kernel; larger alphabets use the row DP.
std::size_t lcs(const SymbolString& a, const SymbolString& b);

/// Raw kernels over unchecked spans. Both return identical results.
std::size_t lcs_dp(std::span<const Symbol> a, std::span<const Symbol> b);
std::size_t lcs_bitparallel(std::span<const Symbol> a, std::span<const Symbol> b);

/// Precomputed match masks of a fixed pattern, for scoring many texts
/// against the same string with the bit-parallel kernel.
class LcsPattern {
 public:
  explicit LcsPattern(std::span<const Symbol> pattern);
  explicit LcsPattern(const SymbolString& pattern) : LcsPattern(pattern.view()) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t lcs(std::span<const Symbol> text) const;
  std::size_t lcs(const SymbolString& text) const { return lcs(text.view()); }

 private:
  const std::uint64_t* mask(Symbol s) const;

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  bool dense_ = false;
  std::vector<std::uint64_t> masks_;
  std::vector<Symbol> symbols_;
  std::vector<std::uint64_t> zero_;
};

/// Insertion/deletion distance: |a| + |b| - 2·lcs(a, b).
std::size_t insdel_distance(const SymbolString& a, const SymbolString& b);

/// Maximum LCS over distinct pairs of an equal-length code; 0 when the code
/// has fewer than two words.
std::size_t lcs_of_code(std::span<const SymbolString> code);

enum class ErrorKind { DeletionsOnly, InsertionsOnly, Mixed };

struct ErrorModel {
  ErrorKind kind = ErrorKind::Mixed;
  std::size_t budget = 0;
};

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// Exhaustive oracle: true iff the error balls of the model around distinct
/// codewords are pairwise disjoint. Throws ResourceLimit once more than
/// `node_budget` strings have been enumerated.
bool decodable_under(std::span<const SymbolString> code, ErrorModel model,
                     std::size_t node_budget = kDefaultNodeBudget);

/// Largest t such that the code is decodable under t deletions, computed as
/// n - lcs_of_code(code) - 1. Requires at least two distinct equal-length words.
std::size_t radius_from_lcs(std::span<const SymbolString> code);

/// Pairing of characters produced by the canonical (leftmost) LCS backtrace.
struct Alignment {
  /// For each source position, the matched target position or -1.
  std::vector<std::ptrdiff_t> source_to_target;
  /// For each target position, the matched source position or -1.
  std::vector<std::ptrdiff_t> target_to_source;
  std::size_t matched = 0;

  /// Deletions plus insertions of the edit script.
  std::size_t cost() const {
    return source_to_target.size() + target_to_source.size() - 2 * matched;
  }
};

/// Optimal alignment taking every match as early as possible. Uses a full
/// O(|a|·|b|) table; meant for instrumentation, not the hot path.
Alignment align(const SymbolString& source, const SymbolString& target);

/// Text form: a "k=<int>" header line, then one string per line in
/// SymbolString text form ("-" for the empty string).
struct StringFile {
  unsigned alphabet_size = 2;
  std::vector<SymbolString> strings;
};

void write_strings(std::ostream& out, const StringFile& file);
StringFile read_strings(std::istream& in);

}  // namespace insdel::seqkit
