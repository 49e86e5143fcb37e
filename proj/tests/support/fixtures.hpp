#pragma once

#include "insdel/highrate.hpp"

namespace insdel::testing {

/// q = n = 16, h = 1, m = 22, δ = 1/8, β = 3/22, d = 6. Built once, in well
/// under a second; design budget 2.
const HighRateSpec& small_highrate_spec();

}  // namespace insdel::testing
