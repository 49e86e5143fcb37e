#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "insdel/error.hpp"

namespace insdel::detail {

inline std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

inline std::optional<std::pair<std::string, std::string>> split_key_value(std::string_view line) {
  auto eq = line.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  return std::make_pair(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
}

template <typename T>
T parse_unsigned(std::string_view text, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidInput("bad integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace insdel::detail
