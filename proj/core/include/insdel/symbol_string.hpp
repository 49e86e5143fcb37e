#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace insdel {

using Symbol = std::uint32_t;

/// A finite string over the alphabet [0, k). Codewords, received words and
/// inner blocks are all SymbolStrings.
class SymbolString {
 public:
  SymbolString() = default;
  explicit SymbolString(unsigned alphabet_size);
  SymbolString(std::vector<Symbol> symbols, unsigned alphabet_size);
  SymbolString(std::initializer_list<Symbol> symbols, unsigned alphabet_size);

  /// Parses base-36 digits ("0".."9", "a".."z", case-insensitive), one per
  /// symbol. Alphabets above 36 use whitespace-separated base-36 numerals.
  static SymbolString parse(std::string_view text, unsigned alphabet_size);
  static SymbolString repeat(Symbol symbol, std::size_t count, unsigned alphabet_size);

  /// Inverse of parse.
  std::string to_string() const;

  unsigned alphabet_size() const noexcept { return k_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  Symbol at(std::size_t i) const;

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }
  std::span<const Symbol> view() const noexcept { return symbols_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  SymbolString substr(std::size_t pos, std::size_t len) const;

  void push_back(Symbol s);
  void append(const SymbolString& other);
  void append(std::span<const Symbol> symbols);
  void insert(std::size_t pos, Symbol s);
  void erase(std::size_t pos);

  friend bool operator==(const SymbolString&, const SymbolString&) = default;
  friend auto operator<=>(const SymbolString& a, const SymbolString& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  unsigned k_ = 2;
};

/// Counts symbols equal to `s`.
std::size_t count_symbol(const SymbolString& str, Symbol s);

char base36_digit(Symbol s);
Symbol base36_value(char c);

}  // namespace insdel
