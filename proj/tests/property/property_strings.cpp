#include <gtest/gtest.h>

#include <sstream>

#include "insdel/channel.hpp"
#include "insdel/seqkit.hpp"
#include "oracles.hpp"

namespace insdel {
namespace {

using seqkit::ErrorKind;
using seqkit::ErrorModel;

constexpr int kCases = 500;

TEST(LcsProperty, SymmetricAndBounded) {
  testing::Gen gen(101);
  for (int i = 0; i < kCases; ++i) {
    const unsigned k = static_cast<unsigned>(gen.between(2, 6));
    const auto a = gen.string(k, gen.between(0, 80));
    const auto b = gen.string(k, gen.between(0, 80));
    const std::size_t ab = seqkit::lcs(a, b);
    ASSERT_EQ(ab, seqkit::lcs(b, a));
    ASSERT_LE(ab, std::min(a.size(), b.size()));
  }
}

TEST(LcsProperty, SubstringNeverIncreasesLcs) {
  testing::Gen gen(102);
  for (int i = 0; i < kCases; ++i) {
    const auto a = gen.string(3, gen.between(1, 60));
    const auto b = gen.string(3, gen.between(0, 60));
    const std::size_t begin = gen.below(a.size());
    const std::size_t len = gen.between(0, a.size() - begin);
    ASSERT_LE(seqkit::lcs(a.substr(begin, len), b), seqkit::lcs(a, b));
  }
}

TEST(DistanceProperty, MatchesGridSearch) {
  testing::Gen gen(103);
  for (int i = 0; i < kCases; ++i) {
    const unsigned k = static_cast<unsigned>(gen.between(2, 4));
    const auto a = gen.string(k, gen.between(0, 12));
    const auto b = gen.string(k, gen.between(0, 12));
    ASSERT_EQ(seqkit::insdel_distance(a, b), testing::grid_bfs_distance(a, b));
  }
}

TEST(DistanceProperty, TriangleInequality) {
  testing::Gen gen(104);
  for (int i = 0; i < kCases; ++i) {
    const auto a = gen.string(3, gen.between(0, 30));
    const auto b = gen.string(3, gen.between(0, 30));
    const auto c = gen.string(3, gen.between(0, 30));
    ASSERT_LE(seqkit::insdel_distance(a, c), seqkit::insdel_distance(a, b) + seqkit::insdel_distance(b, c));
  }
}

TEST(DistanceProperty, EachEditCostsAtMostOne) {
  testing::Gen gen(105);
  for (int i = 0; i < kCases; ++i) {
    const auto a = gen.string(4, gen.between(0, 40));
    auto s = a.symbols();
    const std::size_t edits = gen.between(0, 10);
    for (std::size_t e = 0; e < edits; ++e) {
      if (gen.coin() && !s.empty()) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(gen.below(s.size())));
      } else {
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(gen.below(s.size() + 1)), static_cast<Symbol>(gen.below(4)));
      }
    }
    ASSERT_LE(seqkit::insdel_distance(a, SymbolString(s, 4)), edits);
  }
}

TEST(DecodabilityProperty, ErrorKindsAgree) {
  testing::Gen gen(106);
  for (int i = 0; i < 300; ++i) {
    const unsigned k = static_cast<unsigned>(gen.between(2, 3));
    const std::size_t n = gen.between(2, 5);
    const auto code = gen.code(k, n, gen.between(2, 4));
    if (code.size() < 2) continue;
    const std::size_t t = gen.between(1, 2);
    const bool del = seqkit::decodable_under(code, {ErrorKind::DeletionsOnly, t});
    ASSERT_EQ(del, seqkit::decodable_under(code, {ErrorKind::InsertionsOnly, t}));
    ASSERT_EQ(del, seqkit::decodable_under(code, {ErrorKind::Mixed, t}));
  }
}

TEST(DecodabilityProperty, RadiusIsTheLargestDecodableT) {
  testing::Gen gen(107);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen.between(2, 6);
    const auto code = gen.code(2, n, gen.between(2, 4));
    if (code.size() < 2) continue;
    const std::size_t r = seqkit::radius_from_lcs(code);
    ASSERT_TRUE(seqkit::decodable_under(code, {ErrorKind::Mixed, r}));
    ASSERT_FALSE(seqkit::decodable_under(code, {ErrorKind::Mixed, r + 1}));
  }
}

TEST(TextProperty, SymbolStringRoundTrip) {
  testing::Gen gen(108);
  for (int i = 0; i < kCases; ++i) {
    const unsigned k = static_cast<unsigned>(gen.coin() ? gen.between(2, 36) : gen.between(37, 5000));
    const auto s = gen.string(k, gen.between(0, 30));
    ASSERT_EQ(SymbolString::parse(s.to_string(), k), s);
  }
}

TEST(ChannelProperty, BudgetAndReplayHoldForUntargetedWords) {
  testing::Gen gen(109);
  const Probe probe = [](const SymbolString& s) { return static_cast<double>(s.size() % 7); };
  for (int i = 0; i < 300; ++i) {
    const unsigned k = static_cast<unsigned>(gen.between(2, 5));
    const auto c = gen.string(k, gen.between(0, 50));
    const std::size_t budget = gen.between(0, 20);
    const auto strategy = all_strategies()[gen.below(all_strategies().size())];
    ChannelContext ctx;
    ctx.probe = probe;
    ctx.greedy_rounds = 2;
    const auto r = corrupt(c, budget, strategy, gen.below(1000), ctx);
    ASSERT_TRUE(verify_budget(c, r.output, budget)) << strategy_name(strategy);
    std::stringstream io;
    write_plan(io, r.plan);
    ASSERT_EQ(apply_plan(c, read_plan(io)), r.output);
  }
}

}  // namespace
}  // namespace insdel
