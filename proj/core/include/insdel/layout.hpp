#pragma once

#include <cstddef>
#include <vector>

namespace insdel {

/// Half-open index interval [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const noexcept { return end - begin; }
  bool contains(std::size_t i) const noexcept { return i >= begin && i < end; }
  friend bool operator==(const Span&, const Span&) = default;
};

/// Positions of inner blocks and separator chunks inside an encoded word.
/// Targeted channel strategies use it to aim their edits.
struct Layout {
  std::vector<Span> blocks;
  std::vector<Span> chunks;
};

}  // namespace insdel
