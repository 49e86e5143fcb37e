#include "fixtures.hpp"

namespace insdel::testing {

const HighRateSpec& small_highrate_spec() {
  static const HighRateSpec spec = [] {
    HighRateParams p;
    p.h = 1;
    p.m = 22;
    p.delta = 1.0 / 8;
    p.beta = 3.0 / 22;
    p.outer_dimension = 6;
    return build_highrate_explicit(16, p);
  }();
  return spec;
}

}  // namespace insdel::testing
