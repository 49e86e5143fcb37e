#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "insdel/symbol_string.hpp"

namespace insdel {

/// Every length-`window` substring contains at least `min_ones` ones.
struct Density {
  std::size_t window = 1;
  std::size_t min_ones = 0;

  friend bool operator==(const Density&, const Density&) = default;
};

bool passes_density(const SymbolString& s, const Density& density);

/// Explicit inner code. `radius` is a claim: tables produced by search or
/// make_table carry the verified value, tables read without verification may not.
struct CodeTable {
  unsigned alphabet_size = 2;
  std::size_t length = 0;
  std::vector<SymbolString> codewords;
  std::size_t radius = 0;
  std::optional<Density> density;

  std::size_t size() const noexcept { return codewords.size(); }
  /// log|table| / (m log k).
  double rate() const;
};

/// Builds a table and computes its radius. A singleton table gets radius m-1.
CodeTable make_table(std::vector<SymbolString> codewords, unsigned alphabet_size,
                     std::optional<Density> density = std::nullopt);

/// Radius implied by the codewords alone (n - LCS(C) - 1, or m - 1 for one word).
std::size_t table_radius(const std::vector<SymbolString>& codewords);

/// Human-readable list of claims that fail re-verification; empty when the
/// table is consistent.
std::vector<std::string> table_issues(const CodeTable& table);

/// Throws InvalidInput naming the first failed claim.
void verify_table(const CodeTable& table);

struct SearchOptions {
  /// Stop after this many codewords (0: no limit). The result is then a
  /// prefix of the full greedy table.
  std::size_t max_size = 0;
  /// Search-tree nodes visited before giving up with ResourceLimit.
  std::size_t node_budget = 200'000'000;
};

/// Lexicographic greedy code: every string of [k]^m passing `density` and
/// `endpoints_one` is accepted iff its LCS with every accepted word is at most
/// `max_lcs`. Throws ConstructionFailure on an empty result.
CodeTable search_greedy(std::size_t m, unsigned k, std::size_t max_lcs,
                        std::optional<Density> density, bool endpoints_one,
                        const SearchOptions& options = {});

/// Binary code with pairwise LCS < (1-δ)m, density window ⌈βm⌉ holding at
/// least ⌈βm/10⌉ ones, and optionally first and last symbol 1.
CodeTable search_dense_binary(std::size_t m, double delta, double beta, bool require_endpoints,
                              const SearchOptions& options = {});

/// Code over [k] with pairwise LCS < (1-τ)m.
CodeTable search_kary(std::size_t m, unsigned k, double tau, const SearchOptions& options = {});

/// Largest LCS allowed so that LCS < (1 - fraction)·m.
std::size_t max_lcs_for_fraction(std::size_t m, double fraction);

SymbolString inner_encode(const CodeTable& table, std::size_t index);

/// Index of the unique codeword within insdel distance `max_distance` of
/// `window`; nullopt when none or several qualify.
std::optional<std::size_t> inner_decode(const CodeTable& table, const SymbolString& window,
                                        std::size_t max_distance);

/// Text format: "m=", "k=", "radius=", optional "density=<L>:<count>" headers,
/// then one codeword per line in SymbolString text form.
void write_table(std::ostream& out, const CodeTable& table);
/// With `verify`, rejects files whose header claims fail re-verification.
CodeTable read_table(std::istream& in, bool verify = true);

}  // namespace insdel
