#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "insdel/gf.hpp"
#include "insdel/poly.hpp"

namespace insdel {

/// Reed–Solomon code: evaluations of polynomials of degree < d at the first n
/// field elements in integer order 0, 1, ..., n-1.
struct RSCodeSpec {
  std::shared_ptr<const Field> field;
  std::size_t n = 0;
  std::size_t d = 0;

  /// n defaults to the field order (full evaluation set).
  static RSCodeSpec make(std::shared_ptr<const Field> field, std::size_t d, std::size_t n = 0);

  double rate() const { return static_cast<double>(d) / static_cast<double>(n); }
  FieldElement point(std::size_t i) const { return static_cast<FieldElement>(i); }
  void validate() const;
};

using ReceivedWord = std::vector<std::optional<FieldElement>>;

std::vector<FieldElement> rs_encode(const RSCodeSpec& spec, const Poly& message);

/// Errors-and-erasures decoding (Berlekamp–Welch on the unerased positions).
/// Succeeds whenever 2·errors + erasures < n - d + 1. Outside that range it
/// either fails or returns a codeword within the same error bound; it never
/// returns a polynomial disagreeing with more than ⌊(n' - d)/2⌋ of the n'
/// unerased positions.
std::optional<Poly> rs_decode_ee(const RSCodeSpec& spec, const ReceivedWord& received);

/// Set of (evaluation point, value) pairs; several values per point allowed.
class CandidateSet {
 public:
  using Pair = std::pair<FieldElement, FieldElement>;

  bool insert(FieldElement alpha, FieldElement beta) { return pairs_.emplace(alpha, beta).second; }
  bool contains(FieldElement alpha, FieldElement beta) const { return pairs_.contains({alpha, beta}); }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  /// Number of α with (α, p(α)) in the set.
  std::size_t agreement(const Field& f, const Poly& p) const;

 private:
  std::set<Pair> pairs_;
};

/// Every polynomial of degree < d agreeing with at least `threshold` pairs of
/// J, sorted. Requires threshold² > 2·d·|J| (otherwise InvalidInput).
std::vector<Poly> sudan_list_decode(const RSCodeSpec& spec, const CandidateSet& j,
                                    std::size_t threshold);

/// True iff threshold² > 2·d·|J|.
bool sudan_threshold_sound(std::size_t d, std::size_t j_size, std::size_t threshold);

}  // namespace insdel
