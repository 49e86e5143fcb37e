#include <gtest/gtest.h>

#include <set>
#include <tuple>
#include <sstream>

#include "insdel/error.hpp"
#include "insdel/innersearch.hpp"
#include "insdel/seqkit.hpp"
#include "oracles.hpp"

namespace insdel {
namespace {

std::size_t pairwise_lcs(const std::vector<SymbolString>& words) {
  std::size_t worst = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) worst = std::max(worst, seqkit::lcs(words[i], words[j]));
  }
  return worst;
}

bool window_scan(const SymbolString& w, std::size_t len, std::size_t ones) {
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    std::size_t count = 0;
    for (std::size_t j = i; j < i + len; ++j) count += w[j];
    if (count < ones) return false;
  }
  return true;
}

TEST(DenseBinary, SmallTableSatisfiesRadiusAndDensity) {
  const auto table = search_dense_binary(8, 0.25, 0.5, false);
  ASSERT_TRUE(table.density);
  EXPECT_EQ(table.density->window, 4u);
  EXPECT_EQ(table.density->min_ones, 1u);
  EXPECT_GE(seqkit::radius_from_lcs(table.codewords), 2u);
  EXPECT_GE(table.radius, 2u);
  for (const auto& w : table.codewords) EXPECT_TRUE(window_scan(w, 4, 1)) << w.to_string();
  EXPECT_TRUE(seqkit::decodable_under(table.codewords, {seqkit::ErrorKind::DeletionsOnly, table.radius}));
  EXPECT_TRUE(table_issues(table).empty());
}

TEST(DenseBinary, EndpointsAreOnes) {
  const auto table = search_dense_binary(10, 0.2, 0.4, true);
  for (const auto& w : table.codewords) {
    EXPECT_EQ(w[0], 1u);
    EXPECT_EQ(w[w.size() - 1], 1u);
  }
}

TEST(DenseBinary, GreedyTableIsMaximal) {
  const auto table = search_dense_binary(8, 0.25, 0.5, false);
  const std::set<SymbolString> chosen(table.codewords.begin(), table.codewords.end());
  const std::size_t max_lcs = max_lcs_for_fraction(8, 0.25);
  for (std::uint32_t x = 0; x < 256; ++x) {
    std::vector<Symbol> bits(8);
    for (std::size_t i = 0; i < 8; ++i) bits[i] = (x >> (7 - i)) & 1;
    const SymbolString w(bits, 2);
    if (chosen.count(w) || !passes_density(w, *table.density)) continue;
    bool fits = true;
    for (const auto& c : table.codewords) fits = fits && seqkit::lcs(w, c) <= max_lcs;
    EXPECT_FALSE(fits) << w.to_string() << " could still be added";
  }
}

TEST(DenseBinary, ImpossibleFractionRejected) {
  EXPECT_THROW(search_dense_binary(8, 1.0, 0.5, false), InvalidInput);
  EXPECT_THROW(search_dense_binary(8, 0.25, 0.0, false), InvalidInput);
}

TEST(DenseBinary, AllOnesPassesDensity) {
  const SymbolString ones(std::vector<Symbol>(12, 1), 2);
  for (std::size_t window = 1; window <= 12; ++window) {
    EXPECT_TRUE(passes_density(ones, Density{window, window}));
  }
}

TEST(Kary, FourAryLengthSixHalfFraction) {
  const auto table = search_kary(6, 4, 0.5);
  EXPECT_LE(pairwise_lcs(table.codewords), 2u);
  EXPECT_GE(table.radius, 3u);
  EXPECT_GT(table.size(), 4u);
}

TEST(Kary, ZeroFractionKeepsEveryString) {
  const auto table = search_kary(4, 2, 0.0);
  EXPECT_EQ(table.size(), 16u);
  EXPECT_EQ(table.radius, 0u);
}

TEST(Kary, DisjointSupportOnlyMatchesExhaustiveMaximum) {
  const auto table = search_kary(4, 2, 0.75);
  EXPECT_EQ(table.size(), testing::max_code_size(4, 2, 0));
  EXPECT_EQ(table.size(), 2u);
}

TEST(Kary, GreedyIsNearExhaustiveOnTinySpaces) {
  for (auto [m, k, tau] : {std::tuple{4u, 2u, 0.5}, {5u, 2u, 0.4}, {3u, 3u, 0.5}}) {
    const auto table = search_kary(m, k, tau);
    const std::size_t best = testing::max_code_size(m, k, max_lcs_for_fraction(m, tau));
    EXPECT_LE(table.size(), best);
    EXPECT_LE(pairwise_lcs(table.codewords), max_lcs_for_fraction(m, tau));
  }
}

TEST(Kary, OverLongSearchIsAConstructionFailure) {
  EXPECT_THROW(search_kary(65, 2, 0.5), ConstructionFailure);
}

TEST(InnerCode, EncodeIsBijective) {
  const auto table = search_kary(6, 3, 0.4);
  std::set<SymbolString> seen;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto w = inner_encode(table, i);
    EXPECT_TRUE(seen.insert(w).second);
    EXPECT_EQ(inner_decode(table, w, 0), i);
  }
  EXPECT_THROW(inner_encode(table, table.size()), InvalidInput);
}

TEST(InnerCode, DecodeWithinRadiusIsUnique) {
  const auto table = search_kary(10, 2, 0.4);
  testing::Gen gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t idx = gen.below(table.size());
    std::vector<Symbol> s = table.codewords[idx].symbols();
    const std::size_t edits = gen.between(0, table.radius);
    for (std::size_t e = 0; e < edits; ++e) {
      if (gen.coin() && !s.empty()) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(gen.below(s.size())));
      } else {
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(gen.below(s.size() + 1)), static_cast<Symbol>(gen.below(2)));
      }
    }
    const SymbolString window(s, 2);
    const std::size_t dist = seqkit::insdel_distance(window, table.codewords[idx]);
    ASSERT_LE(dist, table.radius);
    std::size_t within = 0;
    for (const auto& c : table.codewords) within += seqkit::insdel_distance(window, c) <= dist;
    ASSERT_EQ(within, 1u);
    EXPECT_EQ(inner_decode(table, window, dist), idx);
  }
}

TEST(InnerCode, HugeDistanceIsAmbiguous) {
  const auto table = search_kary(6, 2, 0.3);
  ASSERT_GE(table.size(), 2u);
  EXPECT_FALSE(inner_decode(table, table.codewords[0], 12));
  EXPECT_THROW(inner_decode(table, SymbolString::parse("012", 3), 1), InvalidInput);
}

TEST(TableFile, RoundTripAndTamperDetection) {
  const auto table = search_dense_binary(8, 0.25, 0.5, true);
  std::stringstream io;
  write_table(io, table);
  const std::string text = io.str();
  const auto back = read_table(io);
  EXPECT_EQ(back.codewords, table.codewords);
  EXPECT_EQ(back.radius, table.radius);
  EXPECT_EQ(back.density, table.density);

  std::string tampered = text;
  const auto pos = tampered.find("radius=");
  ASSERT_NE(pos, std::string::npos);
  tampered.replace(pos, tampered.find('\n', pos) - pos, "radius=7");
  std::stringstream bad(tampered);
  EXPECT_THROW(read_table(bad), InvalidInput);
  std::stringstream unchecked(tampered);
  EXPECT_EQ(read_table(unchecked, false).radius, 7u);
}

TEST(TableFile, SingletonRadiusIsLengthMinusOne) {
  const auto table = make_table({SymbolString::parse("0110", 2)}, 2);
  EXPECT_EQ(table.radius, 3u);
}

}  // namespace
}  // namespace insdel
