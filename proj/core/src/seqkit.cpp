#include "insdel/seqkit.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "insdel/error.hpp"
#include "text_util.hpp"

namespace insdel::seqkit {

namespace {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

void require_same_alphabet(const SymbolString& a, const SymbolString& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw InvalidInput("alphabet mismatch: " + std::to_string(a.alphabet_size()) + " vs " +
                       std::to_string(b.alphabet_size()));
  }
}

void require_uniform_code(std::span<const SymbolString> code) {
  if (code.empty()) return;
  for (const auto& w : code) {
    require_same_alphabet(code.front(), w);
    if (w.size() != code.front().size()) throw InvalidInput("codewords have ragged lengths");
  }
}

}  // namespace

std::size_t lcs_dp(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Row indexed by the shorter string.
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (Symbol x : a) {
    std::size_t diag = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t up = row[j + 1];
      row[j + 1] = (x == b[j]) ? diag + 1 : std::max(up, row[j]);
      diag = up;
    }
  }
  return row[b.size()];
}

LcsPattern::LcsPattern(std::span<const Symbol> pattern)
    : size_(pattern.size()), words_((pattern.size() + kWordBits - 1) / kWordBits) {
  Symbol max_symbol = 0;
  for (Symbol s : pattern) max_symbol = std::max(max_symbol, s);
  if (max_symbol < 256) {
    dense_ = true;
    masks_.assign(256 * words_, 0);
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      masks_[pattern[j] * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
    }
  } else {
    symbols_.assign(pattern.begin(), pattern.end());
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
    masks_.assign(symbols_.size() * words_, 0);
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      auto it = std::lower_bound(symbols_.begin(), symbols_.end(), pattern[j]);
      auto idx = static_cast<std::size_t>(it - symbols_.begin());
      masks_[idx * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
    }
  }
  zero_.assign(words_, 0);
}

const std::uint64_t* LcsPattern::mask(Symbol s) const {
  if (dense_) return s < 256 ? &masks_[s * words_] : zero_.data();
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end() || *it != s) return zero_.data();
  return &masks_[static_cast<std::size_t>(it - symbols_.begin()) * words_];
}

std::size_t LcsPattern::lcs(std::span<const Symbol> text) const {
  if (size_ == 0) return 0;
  // Single-word fast path.
  if (words_ == 1) {
    Word v = ~Word{0};
    for (Symbol x : text) {
      Word m = *mask(x);
      Word u = v & m;
      v = (v + u) | (v & ~m);
    }
    Word live = size_ == kWordBits ? ~Word{0} : ((Word{1} << size_) - 1);
    return size_ - static_cast<std::size_t>(std::popcount(v & live));
  }
  std::vector<Word> v(words_, ~Word{0});
  for (Symbol x : text) {
    const Word* m = mask(x);
    Word carry = 0;
    for (std::size_t t = 0; t < words_; ++t) {
      Word u = v[t] & m[t];
      Word tmp = v[t] + u;
      Word c1 = tmp < v[t] ? 1 : 0;
      Word sum = tmp + carry;
      Word c2 = sum < tmp ? 1 : 0;
      carry = c1 | c2;
      v[t] = sum | (v[t] & ~m[t]);
    }
  }
  std::size_t zeros = 0;
  for (std::size_t t = 0; t < words_; ++t) {
    std::size_t bits = std::min(kWordBits, size_ - t * kWordBits);
    Word live = bits == kWordBits ? ~Word{0} : ((Word{1} << bits) - 1);
    zeros += bits - static_cast<std::size_t>(std::popcount(v[t] & live));
  }
  return zeros;
}

std::size_t lcs_bitparallel(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() < b.size()) std::swap(a, b);
  return LcsPattern(b).lcs(a);
}

std::size_t lcs(const SymbolString& a, const SymbolString& b) {
  require_same_alphabet(a, b);
  if (a.alphabet_size() <= 256) return lcs_bitparallel(a.view(), b.view());
  return lcs_dp(a.view(), b.view());
}

std::size_t insdel_distance(const SymbolString& a, const SymbolString& b) {
  return a.size() + b.size() - 2 * lcs(a, b);
}

std::size_t lcs_of_code(std::span<const SymbolString> code) {
  require_uniform_code(code);
  std::size_t best = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const LcsPattern pattern(code[i]);
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      if (code[i] == code[j]) continue;
      best = std::max(best, pattern.lcs(code[j]));
    }
  }
  return best;
}

namespace {

using Key = std::u32string;

Key to_key(const SymbolString& s) {
  Key key;
  key.reserve(s.size());
  for (Symbol x : s) key.push_back(static_cast<char32_t>(x));
  return key;
}

class BallEnumerator {
 public:
  BallEnumerator(unsigned k, ErrorModel model, std::size_t node_budget)
      : k_(k), model_(model), node_budget_(node_budget) {}

  // Enumerates the ball around `center`, registering every member as owned
  // by `owner`. Returns false as soon as a member is owned by someone else.
  bool claim(const SymbolString& center, std::size_t owner) {
    std::unordered_set<Key> visited;
    std::vector<Key> frontier{to_key(center)};
    if (!visit(frontier.front(), owner, visited)) return false;
    for (std::size_t step = 0; step < model_.budget && !frontier.empty(); ++step) {
      std::vector<Key> next;
      for (const Key& s : frontier) {
        if (model_.kind != ErrorKind::InsertionsOnly) {
          for (std::size_t i = 0; i < s.size(); ++i) {
            Key t = s;
            t.erase(i, 1);
            if (visited.contains(t)) continue;
            if (!visit(t, owner, visited)) return false;
            next.push_back(std::move(t));
          }
        }
        if (model_.kind != ErrorKind::DeletionsOnly) {
          for (std::size_t i = 0; i <= s.size(); ++i) {
            for (unsigned c = 0; c < k_; ++c) {
              Key t = s;
              t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), static_cast<char32_t>(c));
              if (visited.contains(t)) continue;
              if (!visit(t, owner, visited)) return false;
              next.push_back(std::move(t));
            }
          }
        }
      }
      frontier = std::move(next);
    }
    return true;
  }

 private:
  bool visit(const Key& s, std::size_t owner, std::unordered_set<Key>& visited) {
    if (++nodes_ > node_budget_) {
      throw ResourceLimit("ball enumeration exceeded node budget of " +
                          std::to_string(node_budget_) + " strings");
    }
    visited.insert(s);
    auto [it, inserted] = owners_.try_emplace(s, owner);
    return inserted || it->second == owner;
  }

  unsigned k_;
  ErrorModel model_;
  std::size_t node_budget_;
  std::size_t nodes_ = 0;
  std::unordered_map<Key, std::size_t> owners_;
};

}  // namespace

bool decodable_under(std::span<const SymbolString> code, ErrorModel model,
                     std::size_t node_budget) {
  if (code.size() < 2) throw InvalidInput("decodability needs at least two codewords");
  require_uniform_code(code);
  BallEnumerator balls(code.front().alphabet_size(), model, node_budget);
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (!balls.claim(code[i], i)) return false;
  }
  return true;
}

std::size_t radius_from_lcs(std::span<const SymbolString> code) {
  if (code.size() < 2) throw InvalidInput("radius needs at least two codewords");
  require_uniform_code(code);
  std::vector<SymbolString> sorted(code.begin(), code.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("code contains a repeated codeword");
  }
  return code.front().size() - lcs_of_code(code) - 1;
}

Alignment align(const SymbolString& source, const SymbolString& target) {
  require_same_alphabet(source, target);
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  // suffix[i][j] = LCS(source[i:], target[j:])
  std::vector<std::uint32_t> suffix((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return suffix[i * (m + 1) + j]; };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      at(i, j) = source[i] == target[j] ? at(i + 1, j + 1) + 1
                                        : std::max(at(i + 1, j), at(i, j + 1));
    }
  }
  Alignment out;
  out.source_to_target.assign(n, -1);
  out.target_to_source.assign(m, -1);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n && j < m) {
    if (source[i] == target[j] && at(i, j) == at(i + 1, j + 1) + 1) {
      out.source_to_target[i] = static_cast<std::ptrdiff_t>(j);
      out.target_to_source[j] = static_cast<std::ptrdiff_t>(i);
      ++out.matched;
      ++i;
      ++j;
    } else if (at(i + 1, j) == at(i, j)) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

void write_strings(std::ostream& out, const StringFile& file) {
  out << "k=" << file.alphabet_size << '\n';
  for (const auto& s : file.strings) {
    if (s.alphabet_size() != file.alphabet_size) throw InvalidInput("alphabet mismatch in file");
    out << (s.empty() ? std::string("-") : s.to_string()) << '\n';
  }
}

StringFile read_strings(std::istream& in) {
  StringFile file;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      auto kv = detail::split_key_value(line);
      if (!kv || kv->first != "k") throw InvalidInput("expected header line k=<int>");
      file.alphabet_size = detail::parse_unsigned<unsigned>(kv->second, "k");
      if (file.alphabet_size < 2) throw InvalidInput("text strings need k >= 2");
      have_header = true;
      continue;
    }
    file.strings.push_back(line == "-" ? SymbolString(file.alphabet_size) : SymbolString::parse(line, file.alphabet_size));
  }
  if (!have_header) throw InvalidInput("missing k=<int> header");
  return file;
}

}  // namespace insdel::seqkit
