#include "insdel/innersearch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <memory>
#include <ostream>
#include <set>
#include <unordered_set>

#include "insdel/error.hpp"
#include "insdel/seqkit.hpp"
#include "numeric.hpp"
#include "text_util.hpp"

namespace insdel {

namespace {

using Word = std::uint64_t;

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::uint64_t{1} << 40)) return r;
  }
  return r;
}

// Decides whether a growing prefix already shares more than max_lcs symbols
// (as a subsequence) with some accepted codeword.
class ConflictDetector {
 public:
  virtual ~ConflictDetector() = default;
  // Called with path[0..depth] filled; returns false if the prefix conflicts.
  virtual bool extend(const std::vector<Symbol>& path, std::size_t depth) = 0;
  virtual void accept(const std::vector<Symbol>& word) = 0;
  // Re-checks path[0..length) in full after new words were accepted.
  virtual bool prefix_ok(const std::vector<Symbol>& path, std::size_t length) const = 0;
};

// Incremental bit-parallel LCS of the prefix against each accepted word.
class BitParallelDetector final : public ConflictDetector {
 public:
  BitParallelDetector(std::size_t m, unsigned k, std::size_t max_lcs)
      : m_(m), k_(k), max_lcs_(max_lcs), states_(m + 1),
        live_(m == 64 ? ~Word{0} : ((Word{1} << m) - 1)) {}

  bool extend(const std::vector<Symbol>& path, std::size_t depth) override {
    const Symbol x = path[depth];
    const auto& prev = states_[depth];
    auto& next = states_[depth + 1];
    next.resize(prev.size());
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const Word mk = masks_[i * k_ + x];
      const Word v = prev[i];
      const Word nv = (v + (v & mk)) | (v & ~mk);
      next[i] = nv;
      if (m_ - static_cast<std::size_t>(std::popcount(nv & live_)) > max_lcs_) return false;
    }
    return true;
  }

  void accept(const std::vector<Symbol>& word) override {
    const std::size_t base = masks_.size();
    masks_.resize(base + k_, 0);
    for (std::size_t j = 0; j < m_; ++j) masks_[base + word[j]] |= Word{1} << j;
    // Prefix states of the current path (which is `word`) against the new word.
    Word v = ~Word{0};
    states_[0].push_back(v);
    for (std::size_t t = 0; t < m_; ++t) {
      const Word mk = masks_[base + word[t]];
      v = (v + (v & mk)) | (v & ~mk);
      states_[t + 1].push_back(v);
    }
  }

  // extend() always scores the whole prefix, so stale ancestors are caught there.
  bool prefix_ok(const std::vector<Symbol>&, std::size_t) const override { return true; }

 private:
  std::size_t m_;
  unsigned k_;
  std::size_t max_lcs_;
  std::vector<Word> masks_;
  std::vector<std::vector<Word>> states_;
  Word live_;
};

// LCS(a, b) > L iff a and b share a subsequence of length L + 1, so it is
// enough to remember every (L+1)-subsequence of every accepted word.
class SubsequenceDetector final : public ConflictDetector {
 public:
  SubsequenceDetector(unsigned k, std::size_t max_lcs)
      : need_(max_lcs + 1), bits_(static_cast<unsigned>(std::bit_width(k - 1u))) {}

  static bool feasible(std::size_t m, unsigned k, std::size_t max_lcs) {
    const unsigned bits = static_cast<unsigned>(std::bit_width(k - 1u));
    return (max_lcs + 1) * bits <= 64 && binomial(m, max_lcs + 1) <= 4096;
  }

  bool extend(const std::vector<Symbol>& path, std::size_t depth) override {
    if (need_ > depth + 1 || seen_.empty()) return true;
    bool clash = false;
    // Subsequences ending at `depth`: choose need_-1 earlier positions.
    std::vector<std::size_t> idx(need_ - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
      Word key = 0;
      for (auto i : idx) key = (key << bits_) | path[i];
      key = (key << bits_) | path[depth];
      if (seen_.contains(key)) {
        clash = true;
        break;
      }
      if (!next_combination(idx, depth)) break;
    }
    return !clash;
  }

  void accept(const std::vector<Symbol>& word) override {
    if (need_ > word.size()) return;
    std::vector<std::size_t> idx(need_);
    for (std::size_t i = 0; i < need_; ++i) idx[i] = i;
    while (true) {
      Word key = 0;
      for (auto i : idx) key = (key << bits_) | word[i];
      seen_.insert(key);
      if (!next_combination(idx, word.size())) break;
    }
  }

  bool prefix_ok(const std::vector<Symbol>& path, std::size_t length) const override {
    if (need_ > length) return true;
    std::vector<std::size_t> idx(need_);
    for (std::size_t i = 0; i < need_; ++i) idx[i] = i;
    while (true) {
      Word key = 0;
      for (auto i : idx) key = (key << bits_) | path[i];
      if (seen_.contains(key)) return false;
      if (!next_combination(idx, length)) return true;
    }
  }

 private:
  // Advances a sorted index tuple over [0, n); false when exhausted.
  static bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t r = idx.size();
    if (r == 0) return false;
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (idx[i] < n - r + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::size_t need_;
  unsigned bits_;
  std::unordered_set<Word> seen_;
};

class GreedySearch {
 public:
  GreedySearch(std::size_t m, unsigned k, std::size_t max_lcs, std::optional<Density> density,
               bool endpoints_one, const SearchOptions& options)
      : m_(m), k_(k), max_lcs_(max_lcs), density_(density), endpoints_(endpoints_one),
        options_(options), path_(m, 0), ones_prefix_(m + 1, 0) {
    if (SubsequenceDetector::feasible(m, k, max_lcs)) {
      detector_ = std::make_unique<SubsequenceDetector>(k, max_lcs);
    } else {
      detector_ = std::make_unique<BitParallelDetector>(m, k, max_lcs);
    }
  }

  std::vector<SymbolString> run() {
    descend(0);
    return std::move(accepted_);
  }

 private:
  // Returns false once the search should stop.
  bool descend(std::size_t depth) {
    if (depth == m_) {
      detector_->accept(path_);
      accepted_.emplace_back(path_, k_);
      return options_.max_size == 0 || accepted_.size() < options_.max_size;
    }
    for (unsigned x = 0; x < k_; ++x) {
      if (++nodes_ > options_.node_budget) {
        throw ResourceLimit("inner-code search exceeded node budget of " +
                            std::to_string(options_.node_budget) + " after " +
                            std::to_string(accepted_.size()) + " codewords");
      }
      if (endpoints_ && (depth == 0 || depth + 1 == m_) && x != 1) continue;
      path_[depth] = x;
      ones_prefix_[depth + 1] = ones_prefix_[depth] + (x == 1 ? 1 : 0);
      if (density_ && depth + 1 >= density_->window &&
          ones_prefix_[depth + 1] - ones_prefix_[depth + 1 - density_->window] < density_->min_ones) {
        continue;
      }
      if (!detector_->extend(path_, depth)) continue;
      const std::size_t before = accepted_.size();
      if (!descend(depth + 1)) return false;
      // A word accepted below may conflict with the shared prefix itself.
      if (accepted_.size() != before && !detector_->prefix_ok(path_, depth)) return true;
    }
    return true;
  }

  std::size_t m_;
  unsigned k_;
  std::size_t max_lcs_;
  std::optional<Density> density_;
  bool endpoints_;
  SearchOptions options_;
  std::vector<Symbol> path_;
  std::vector<std::size_t> ones_prefix_;
  std::unique_ptr<ConflictDetector> detector_;
  std::vector<SymbolString> accepted_;
  std::size_t nodes_ = 0;
};

}  // namespace

bool passes_density(const SymbolString& s, const Density& density) {
  if (density.window == 0 || density.window > s.size()) return true;
  std::size_t ones = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    ones += s[i] == 1 ? 1 : 0;
    if (i >= density.window) ones -= s[i - density.window] == 1 ? 1 : 0;
    if (i + 1 >= density.window && ones < density.min_ones) return false;
  }
  return true;
}

double CodeTable::rate() const {
  if (codewords.empty() || length == 0) return 0.0;
  return std::log2(static_cast<double>(codewords.size())) /
         (static_cast<double>(length) * std::log2(static_cast<double>(alphabet_size)));
}

std::size_t table_radius(const std::vector<SymbolString>& codewords) {
  if (codewords.empty()) throw InvalidInput("empty code table");
  if (codewords.size() == 1) return codewords.front().size() == 0 ? 0 : codewords.front().size() - 1;
  return seqkit::radius_from_lcs(codewords);
}

CodeTable make_table(std::vector<SymbolString> codewords, unsigned alphabet_size,
                     std::optional<Density> density) {
  if (codewords.empty()) throw InvalidInput("empty code table");
  CodeTable table;
  table.alphabet_size = alphabet_size;
  table.length = codewords.front().size();
  for (const auto& w : codewords) {
    if (w.alphabet_size() != alphabet_size) throw InvalidInput("codeword alphabet mismatch");
  }
  table.radius = table_radius(codewords);
  table.codewords = std::move(codewords);
  table.density = density;
  if (density) {
    for (const auto& w : table.codewords) {
      if (!passes_density(w, *density)) throw InvalidInput("codeword " + w.to_string() + " fails density");
    }
  }
  return table;
}

std::vector<std::string> table_issues(const CodeTable& table) {
  std::vector<std::string> issues;
  if (table.codewords.empty()) {
    issues.emplace_back("table is empty");
    return issues;
  }
  for (const auto& w : table.codewords) {
    if (w.alphabet_size() != table.alphabet_size) {
      issues.emplace_back("codeword alphabet differs from k=" + std::to_string(table.alphabet_size));
      return issues;
    }
    if (w.size() != table.length) {
      issues.emplace_back("codeword length differs from m=" + std::to_string(table.length));
      return issues;
    }
  }
  std::set<SymbolString> distinct(table.codewords.begin(), table.codewords.end());
  if (distinct.size() != table.codewords.size()) {
    issues.emplace_back("table contains repeated codewords");
    return issues;
  }
  const std::size_t actual = table_radius(table.codewords);
  if (actual != table.radius) {
    issues.emplace_back("radius mismatch: claimed " + std::to_string(table.radius) + ", codewords give " +
                        std::to_string(actual));
  }
  if (table.density) {
    for (const auto& w : table.codewords) {
      if (!passes_density(w, *table.density)) {
        issues.emplace_back("density mismatch: some window of length " +
                            std::to_string(table.density->window) + " has fewer than " +
                            std::to_string(table.density->min_ones) + " ones");
        break;
      }
    }
  }
  return issues;
}

void verify_table(const CodeTable& table) {
  auto issues = table_issues(table);
  if (!issues.empty()) throw InvalidInput("code table failed verification: " + issues.front());
}

std::size_t max_lcs_for_fraction(std::size_t m, double fraction) {
  const double bound = (1.0 - fraction) * static_cast<double>(m);
  if (bound <= detail::kRoundingSlack) {
    throw InvalidInput("fraction " + std::to_string(fraction) + " leaves no LCS room at m=" +
                       std::to_string(m));
  }
  return detail::ceil_count(bound) - 1;
}

CodeTable search_greedy(std::size_t m, unsigned k, std::size_t max_lcs,
                        std::optional<Density> density, bool endpoints_one,
                        const SearchOptions& options) {
  if (m == 0) throw InvalidInput("inner length must be positive");
  if (k < 2) throw InvalidInput("alphabet size must be at least 2");
  if (m > 64) {
    throw ConstructionFailure("inner-code search supports m <= 64, requested m=" + std::to_string(m));
  }
  if ((density || endpoints_one) && k != 2) throw InvalidInput("density filters apply to binary codes");
  auto words = GreedySearch(m, k, max_lcs, density, endpoints_one, options).run();
  if (words.empty()) {
    std::string what = "no codeword of length " + std::to_string(m) + " passes the filters";
    if (density) {
      what += " (density " + std::to_string(density->min_ones) + " ones per " +
              std::to_string(density->window) + ")";
    }
    throw ConstructionFailure(what);
  }
  CodeTable table;
  table.alphabet_size = k;
  table.length = m;
  table.radius = table_radius(words);
  table.codewords = std::move(words);
  table.density = density;
  return table;
}

CodeTable search_dense_binary(std::size_t m, double delta, double beta, bool require_endpoints,
                              const SearchOptions& options) {
  if (!(delta > 0 && delta < 1)) throw InvalidInput("delta must lie in (0, 1)");
  if (!(beta > 0 && beta < 1)) throw InvalidInput("beta must lie in (0, 1)");
  const std::size_t max_lcs = max_lcs_for_fraction(m, delta);
  const double span = beta * static_cast<double>(m);
  Density density{std::max<std::size_t>(detail::ceil_count(span), 1), detail::ceil_count(span / 10.0)};
  return search_greedy(m, 2, max_lcs, density, require_endpoints, options);
}

CodeTable search_kary(std::size_t m, unsigned k, double tau, const SearchOptions& options) {
  if (!(tau >= 0 && tau < 1)) throw InvalidInput("target fraction must lie in [0, 1)");
  return search_greedy(m, k, max_lcs_for_fraction(m, tau), std::nullopt, false, options);
}

SymbolString inner_encode(const CodeTable& table, std::size_t index) {
  if (index >= table.codewords.size()) {
    throw InvalidInput("inner index " + std::to_string(index) + " outside table of size " +
                       std::to_string(table.codewords.size()));
  }
  return table.codewords[index];
}

std::optional<std::size_t> inner_decode(const CodeTable& table, const SymbolString& window,
                                        std::size_t max_distance) {
  if (window.alphabet_size() != table.alphabet_size) throw InvalidInput("window alphabet mismatch");
  const std::size_t total = window.size() + table.length;
  const std::size_t gap = window.size() > table.length ? window.size() - table.length
                                                        : table.length - window.size();
  if (gap > max_distance) return std::nullopt;
  // Δ ≤ D  <=>  LCS ≥ (|w| + m - D) / 2
  const std::size_t need = total > max_distance ? (total - max_distance + 1) / 2 : 0;
  seqkit::LcsPattern pattern(window);
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < table.codewords.size(); ++i) {
    if (pattern.lcs(table.codewords[i]) >= need) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

void write_table(std::ostream& out, const CodeTable& table) {
  out << "m=" << table.length << '\n';
  out << "k=" << table.alphabet_size << '\n';
  out << "radius=" << table.radius << '\n';
  if (table.density) out << "density=" << table.density->window << ':' << table.density->min_ones << '\n';
  for (const auto& w : table.codewords) out << w.to_string() << '\n';
}

CodeTable read_table(std::istream& in, bool verify) {
  CodeTable table;
  bool have_m = false;
  bool have_k = false;
  bool have_radius = false;
  std::string line;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (auto kv = detail::split_key_value(line)) {
      const auto& [key, value] = *kv;
      if (key == "m") {
        table.length = detail::parse_unsigned<std::size_t>(value, "m");
        have_m = true;
      } else if (key == "k") {
        table.alphabet_size = detail::parse_unsigned<unsigned>(value, "k");
        if (table.alphabet_size < 2) throw InvalidInput("table needs k >= 2");
        have_k = true;
      } else if (key == "radius") {
        table.radius = detail::parse_unsigned<std::size_t>(value, "radius");
        have_radius = true;
      } else if (key == "density") {
        auto colon = value.find(':');
        if (colon == std::string::npos) throw InvalidInput("density header must be <L>:<count>");
        table.density = Density{detail::parse_unsigned<std::size_t>(value.substr(0, colon), "density window"),
                                detail::parse_unsigned<std::size_t>(value.substr(colon + 1), "density count")};
      } else {
        throw InvalidInput("unknown table header '" + key + "'");
      }
      continue;
    }
    if (!have_k) throw InvalidInput("codeword before k= header");
    table.codewords.push_back(SymbolString::parse(line, table.alphabet_size));
  }
  if (!have_m || !have_k || !have_radius) throw InvalidInput("table file needs m=, k= and radius= headers");
  if (verify) verify_table(table);
  return table;
}

}  // namespace insdel
