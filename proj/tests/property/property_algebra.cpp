#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "insdel/gf.hpp"
#include "insdel/poly.hpp"
#include "insdel/rs.hpp"
#include "oracles.hpp"

namespace insdel {
namespace {

const std::vector<std::pair<std::uint32_t, unsigned>> kFields{{2, 1}, {3, 1}, {2, 3}, {5, 2}, {2, 8},
                                                              {7, 3}, {2, 16}, {3, 7}, {65521, 1}};

TEST(FieldProperty, SampledAxioms) {
  testing::Gen gen(201);
  for (auto [p, e] : kFields) {
    const Field f(p, e);
    const auto q = static_cast<std::size_t>(f.order());
    for (int i = 0; i < 300; ++i) {
      const auto a = static_cast<FieldElement>(gen.below(q));
      const auto b = static_cast<FieldElement>(gen.below(q));
      const auto c = static_cast<FieldElement>(gen.below(q));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.mul(a, b), testing::schoolbook_mul(f, a, b));
      if (a != 0) {
        ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
        ASSERT_EQ(f.div(f.mul(a, b), a), b);
      }
    }
  }
}

TEST(PolyProperty, EvaluationIsARingHomomorphism) {
  testing::Gen gen(202);
  for (auto [p, e] : kFields) {
    const Field f(p, e);
    for (int i = 0; i < 100; ++i) {
      const Poly a = gen.poly(f, gen.between(0, 6));
      const Poly b = gen.poly(f, gen.between(0, 6));
      const auto x = static_cast<FieldElement>(gen.below(static_cast<std::size_t>(f.order())));
      ASSERT_EQ(poly_eval(f, poly_add(f, a, b), x), f.add(poly_eval(f, a, x), poly_eval(f, b, x)));
      ASSERT_EQ(poly_eval(f, poly_mul(f, a, b), x), f.mul(poly_eval(f, a, x), poly_eval(f, b, x)));
    }
  }
}

TEST(PolyProperty, InterpolationRecoversRandomPolynomials) {
  testing::Gen gen(203);
  const Field f(2, 6);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = gen.between(1, 10);
    const Poly p = gen.poly(f, d);
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    std::vector<FieldElement> xs(64);
    for (FieldElement x = 0; x < 64; ++x) xs[x] = x;
    std::shuffle(xs.begin(), xs.end(), gen.engine());
    for (std::size_t j = 0; j < d + gen.below(4); ++j) pts.emplace_back(xs[j], poly_eval(f, p, xs[j]));
    ASSERT_EQ(poly_interpolate(f, pts, d), p);
  }
}

TEST(RsProperty, ErrorsAndErasuresWithinRadiusDecode) {
  testing::Gen gen(204);
  const auto field = std::make_shared<const Field>(Field::of_order(64));
  for (int i = 0; i < 300; ++i) {
    const auto spec = RSCodeSpec::make(field, gen.between(1, 40));
    const Poly msg = gen.poly(*field, spec.d);
    const auto word = rs_encode(spec, msg);
    ReceivedWord received(word.begin(), word.end());
    const std::size_t slack = spec.n - spec.d;
    const std::size_t errors = gen.between(0, slack / 2);
    const std::size_t erasures = gen.between(0, slack - 2 * errors);
    std::vector<std::size_t> pos(spec.n);
    for (std::size_t j = 0; j < spec.n; ++j) pos[j] = j;
    std::shuffle(pos.begin(), pos.end(), gen.engine());
    for (std::size_t j = 0; j < errors; ++j) {
      received[pos[j]] = field->add(word[pos[j]], static_cast<FieldElement>(gen.between(1, 63)));
    }
    for (std::size_t j = errors; j < errors + erasures; ++j) received[pos[j]] = std::nullopt;
    ASSERT_EQ(rs_decode_ee(spec, received), msg) << "d=" << spec.d << " E=" << errors << " S=" << erasures;
  }
}

TEST(RsProperty, DecoderNeverReturnsAFarPolynomial) {
  testing::Gen gen(205);
  const auto field = std::make_shared<const Field>(Field::of_order(16));
  for (int i = 0; i < 300; ++i) {
    const auto spec = RSCodeSpec::make(field, gen.between(1, 8));
    ReceivedWord received(spec.n);
    std::size_t unerased = 0;
    for (auto& r : received) {
      if (gen.below(4) != 0) {
        r = static_cast<FieldElement>(gen.below(16));
        ++unerased;
      }
    }
    const auto got = rs_decode_ee(spec, received);
    if (!got) continue;
    const auto c = rs_encode(spec, *got);
    std::size_t disagree = 0;
    for (std::size_t j = 0; j < spec.n; ++j) disagree += received[j] && *received[j] != c[j];
    const std::size_t limit = unerased >= spec.d ? (unerased - spec.d) / 2 : 0;
    ASSERT_LE(disagree, limit);
  }
}

TEST(SudanProperty, MatchesExhaustiveScanAndSizeBound) {
  testing::Gen gen(206);
  for (int i = 0; i < 150; ++i) {
    const std::uint64_t q = std::vector<std::uint64_t>{5, 7, 8, 9, 11, 13, 16}[gen.below(7)];
    const auto field = std::make_shared<const Field>(Field::of_order(q));
    const auto spec = RSCodeSpec::make(field, gen.between(1, 3));
    CandidateSet j;
    const std::size_t lines = gen.between(0, 3);
    for (std::size_t l = 0; l < lines; ++l) {
      const Poly p = gen.poly(*field, spec.d);
      for (std::size_t x = 0; x < q; ++x) {
        if (gen.below(3) != 0) j.insert(static_cast<FieldElement>(x), poly_eval(*field, p, static_cast<FieldElement>(x)));
      }
    }
    const std::size_t noise = gen.between(0, q);
    for (std::size_t l = 0; l < noise; ++l) {
      j.insert(static_cast<FieldElement>(gen.below(q)), static_cast<FieldElement>(gen.below(q)));
    }
    const auto threshold =
        static_cast<std::size_t>(std::floor(std::sqrt(2.0 * static_cast<double>(spec.d * j.size())))) + 1;
    ASSERT_TRUE(sudan_threshold_sound(spec.d, j.size(), threshold));
    const auto got = sudan_list_decode(spec, j, threshold);
    ASSERT_EQ(got, testing::scan_all_polys(spec, j, threshold));
    ASSERT_LE(static_cast<double>(got.size()), std::sqrt(2.0 * static_cast<double>(j.size()) / spec.d) + 1e-9);
  }
}

}  // namespace
}  // namespace insdel
