#pragma once

#include <cmath>
#include <cstddef>

namespace insdel::detail {

// Rounding of fraction·length products. The tolerance keeps values such as
// 0.25 * 16 from landing one unit off through representation error.
inline constexpr double kRoundingSlack = 1e-9;

inline std::size_t ceil_count(double x) {
  if (x <= 0) return 0;
  return static_cast<std::size_t>(std::ceil(x - kRoundingSlack));
}

inline std::size_t floor_count(double x) {
  if (x <= 0) return 0;
  return static_cast<std::size_t>(std::floor(x + kRoundingSlack));
}

}  // namespace insdel::detail
