#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "insdel/highrate.hpp"
#include "insdel/innersearch.hpp"
#include "insdel/listconcat.hpp"

namespace insdel {

enum class BuildMode { Paper, Explicit };

/// Explicit-mode parameters of the list-decoded concatenations.
struct ConcatParams {
  unsigned k = 2;
  std::size_t m = 8;
  /// RS dimension; 0 derives it from the regime's outer rate.
  std::size_t outer_dimension = 0;
  /// Decoder slack; 0 selects 4·r^(1/4) for the achieved outer rate r.
  double gamma = 0;
  /// Inner insdel fraction to search for; 0 selects the regime's target.
  double inner_fraction = 0;
  SearchOptions search;
};

/// Paper mode: k = ⌈4096/ε³⌉, m = ⌈24·log2(q)/ε⌉, outer rate (ε/8)⁴,
/// inner fraction 1 - ε/4. Requires 0 < ε < 1/2.
ConcatCodeSpec build_highnoise(double epsilon, std::uint64_t q, BuildMode mode, const ConcatParams& params = {});

/// γ = 2(ε/5)⁴, outer rate γ/2, inner fraction 1 - 2/(k+1) - γ/4.
/// Requires k ≥ 2, ε > 0 and 2/(k+1) + ε < 1. Paper mode picks the
/// smallest m the search can serve.
ConcatCodeSpec build_kary(unsigned k, double epsilon, std::uint64_t q, BuildMode mode,
                          const ConcatParams& params = {});

/// (1 - ε/4 - 4((ε/8)⁴)^(1/4)) - (1 - ε); positive on 0 < ε < 1/2.
double highnoise_slack(double epsilon);
/// (1 - 2/(k+1) - γ/4 - 4(γ/2)^(1/4)) - (1 - 2/(k+1) - ε) with γ = 2(ε/5)⁴.
double kary_slack(unsigned k, double epsilon);
/// ε - ((ε/8)⁴ + 2·ε/4): margin of the high-noise LCS bound.
double highnoise_lcs_margin(double epsilon);

/// Concatenation of an arbitrary outer word through an inner table.
SymbolString concatenate(const SymbolString& outer_word, const std::vector<SymbolString>& inner);

/// Exhaustive comparison of LCS(C) with the bound (Δ + 2δ)·n·m, where
/// Δ = LCS(C_out)/n and δ = LCS(C_in)/m are measured on the given codes.
struct Lemma5Result {
  std::size_t pairs = 0;
  std::size_t lcs_code = 0;
  std::size_t lcs_outer = 0;
  std::size_t lcs_inner = 0;
  /// (Δ + 2δ)·n·m as an exact integer: LCS_out·m + 2·LCS_in·n.
  std::size_t bound = 0;
  std::size_t violations = 0;
};

Lemma5Result lemma5_exhaustive(const std::vector<SymbolString>& outer, const std::vector<SymbolString>& inner);

struct RegimeCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RegimeReport {
  std::string regime;
  std::vector<std::pair<std::string, std::string>> params;
  double rate = 0;
  /// Fraction of N the decoder is claimed to survive; 0 when unclaimed.
  double claimed_fraction = 0;
  std::vector<RegimeCheck> checks;

  bool passed() const;
};

struct VerifyEffort {
  /// Enumerate every codeword when the code has at most this many.
  std::size_t exhaustive_limit = 64;
  /// Random codeword pairs otherwise.
  std::size_t sampled_pairs = 200;
  std::uint64_t seed = 1;
};

RegimeReport verify_code(const ConcatCodeSpec& spec, const VerifyEffort& effort = {},
                         const std::string& regime = "concat");
RegimeReport verify_code(const HighRateSpec& spec, const VerifyEffort& effort = {});

/// key=value lines, then "PASS <check>" or "FAIL <check>: <detail>".
void write_report(std::ostream& out, const RegimeReport& report);

}  // namespace insdel
