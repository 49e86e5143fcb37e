#include "insdel/symbol_string.hpp"

#include <algorithm>
#include <charconv>

#include "insdel/error.hpp"

namespace insdel {

namespace {

void check_alphabet(unsigned k) {
  if (k < 2) throw InvalidInput("alphabet size must be at least 2");
}

}  // namespace

char base36_digit(Symbol s) {
  if (s < 10) return static_cast<char>('0' + s);
  if (s < 36) return static_cast<char>('a' + (s - 10));
  throw InvalidInput("symbol " + std::to_string(s) + " has no base-36 digit");
}

Symbol base36_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(c - 'a' + 10);
  if (c >= 'A' && c <= 'Z') return static_cast<Symbol>(c - 'A' + 10);
  throw InvalidInput(std::string("not a base-36 digit: '") + c + "'");
}

SymbolString::SymbolString(unsigned alphabet_size) : k_(alphabet_size) {
  check_alphabet(k_);
}

SymbolString::SymbolString(std::vector<Symbol> symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), k_(alphabet_size) {
  check_alphabet(k_);
  for (Symbol s : symbols_) {
    if (s >= k_) {
      throw InvalidInput("symbol " + std::to_string(s) + " outside alphabet of size " +
                         std::to_string(k_));
    }
  }
}

SymbolString::SymbolString(std::initializer_list<Symbol> symbols, unsigned alphabet_size)
    : SymbolString(std::vector<Symbol>(symbols), alphabet_size) {}

SymbolString SymbolString::parse(std::string_view text, unsigned alphabet_size) {
  std::vector<Symbol> out;
  if (alphabet_size <= 36) {
    out.reserve(text.size());
    for (char c : text) out.push_back(base36_value(c));
    return SymbolString(std::move(out), alphabet_size);
  }
  std::size_t pos = 0;
  while (true) {
    pos = text.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    const std::size_t end = std::min(text.find_first_of(" \t", pos), text.size());
    Symbol value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value, 36);
    if (ec != std::errc{} || ptr != text.data() + end) {
      throw InvalidInput("bad base-36 numeral '" + std::string(text.substr(pos, end - pos)) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return SymbolString(std::move(out), alphabet_size);
}

SymbolString SymbolString::repeat(Symbol symbol, std::size_t count, unsigned alphabet_size) {
  return SymbolString(std::vector<Symbol>(count, symbol), alphabet_size);
}

std::string SymbolString::to_string() const {
  std::string out;
  if (k_ > 36) {
    char buf[16];
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i) out.push_back(' ');
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, symbols_[i], 36);
      out.append(buf, ptr);
    }
    return out;
  }
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(base36_digit(s));
  return out;
}

Symbol SymbolString::at(std::size_t i) const {
  if (i >= symbols_.size()) throw InvalidInput("symbol index out of range");
  return symbols_[i];
}

SymbolString SymbolString::substr(std::size_t pos, std::size_t len) const {
  SymbolString out(k_);
  if (pos >= symbols_.size()) return out;
  len = std::min(len, symbols_.size() - pos);
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

void SymbolString::push_back(Symbol s) {
  if (s >= k_) throw InvalidInput("symbol outside alphabet");
  symbols_.push_back(s);
}

void SymbolString::append(const SymbolString& other) {
  if (other.k_ != k_) throw InvalidInput("alphabet mismatch in append");
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

void SymbolString::append(std::span<const Symbol> symbols) {
  for (Symbol s : symbols) push_back(s);
}

void SymbolString::insert(std::size_t pos, Symbol s) {
  if (pos > symbols_.size()) throw InvalidInput("insert position out of range");
  if (s >= k_) throw InvalidInput("symbol outside alphabet");
  symbols_.insert(symbols_.begin() + static_cast<std::ptrdiff_t>(pos), s);
}

void SymbolString::erase(std::size_t pos) {
  if (pos >= symbols_.size()) throw InvalidInput("erase position out of range");
  symbols_.erase(symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::size_t count_symbol(const SymbolString& str, Symbol s) {
  return static_cast<std::size_t>(std::count(str.begin(), str.end(), s));
}

}  // namespace insdel
