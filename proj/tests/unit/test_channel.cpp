#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "insdel/channel.hpp"
#include "insdel/error.hpp"
#include "insdel/seqkit.hpp"
#include "oracles.hpp"

namespace insdel {
namespace {

struct Target {
  SymbolString word;
  Layout layout;
  ChannelContext context;
};

Target highrate_target(std::uint64_t seed) {
  const auto& spec = testing::small_highrate_spec();
  testing::Gen gen(seed);
  Target t{hr_encode(spec, gen.poly(*spec.outer.field, spec.outer.d)), highrate_layout(spec), {}};
  t.context.buffer_length = spec.buffer_length;
  t.context.buffer_ones = spec.buffer_ones();
  // Score: buffers found away from the clean count.
  t.context.probe = [&spec](const SymbolString& s) {
    const auto scan = find_buffers(s, spec.buffer_length, spec.theta_buf);
    const double diff = static_cast<double>(scan.buffers.size()) - static_cast<double>(spec.n - 1);
    return diff < 0 ? -diff : diff;
  };
  return t;
}

TEST(Channel, ZeroBudgetIsIdentity) {
  auto t = highrate_target(1);
  t.context.layout = &t.layout;
  for (auto strategy : all_strategies()) {
    const auto r = corrupt(t.word, 0, strategy, 5, t.context);
    EXPECT_EQ(r.output, t.word) << strategy_name(strategy);
    EXPECT_TRUE(r.plan.edits.empty());
  }
}

TEST(Channel, UniformLengthStaysInRange) {
  testing::Gen gen(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = gen.string(3, gen.between(0, 40));
    const std::size_t b = gen.between(0, 15);
    const auto r = corrupt(c, b, Strategy::Uniform, static_cast<std::uint64_t>(trial));
    EXPECT_LE(r.output.size(), c.size() + b);
    EXPECT_GE(r.output.size() + b, c.size());
    EXPECT_LE(r.plan.edits.size(), b);
  }
}

TEST(Channel, EveryStrategyRespectsItsBudget) {
  auto t = highrate_target(3);
  t.context.layout = &t.layout;
  for (auto strategy : all_strategies()) {
    for (std::size_t budget : {1u, 2u, 5u, 13u, 40u}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto r = corrupt(t.word, budget, strategy, seed, t.context);
        EXPECT_TRUE(verify_budget(t.word, r.output, budget)) << strategy_name(strategy) << " budget " << budget;
        EXPECT_EQ(apply_plan(t.word, r.plan), r.output);
        EXPECT_EQ(r.plan.budget, budget);
        EXPECT_EQ(r.plan.strategy, strategy);
      }
    }
  }
}

TEST(Channel, BufferSpoofForgesABuffer) {
  const auto& spec = testing::small_highrate_spec();
  auto t = highrate_target(4);
  t.context.layout = &t.layout;
  const auto before = find_buffers(t.word, spec.buffer_length, spec.theta_buf);
  ASSERT_EQ(before.buffers.size(), spec.n - 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = corrupt(t.word, spec.buffer_length, Strategy::BufferSpoof, seed, t.context);
    const auto after = find_buffers(r.output, spec.buffer_length, spec.theta_buf);
    EXPECT_GT(after.buffers.size(), before.buffers.size()) << "seed " << seed;
  }
}

TEST(Channel, DeterministicPerSeed) {
  auto t = highrate_target(5);
  t.context.layout = &t.layout;
  for (auto strategy : all_strategies()) {
    const auto a = corrupt(t.word, 6, strategy, 99, t.context);
    const auto b = corrupt(t.word, 6, strategy, 99, t.context);
    EXPECT_EQ(a.output, b.output) << strategy_name(strategy);
    EXPECT_EQ(a.plan.edits, b.plan.edits);
  }
}

TEST(Channel, GreedyNeedsAProbe) {
  const auto c = SymbolString::parse("0101", 2);
  EXPECT_THROW(corrupt(c, 1, Strategy::Greedy, 0), InvalidInput);
}

TEST(Channel, StrategyNames) {
  for (auto strategy : all_strategies()) EXPECT_EQ(parse_strategy(strategy_name(strategy)), strategy);
  EXPECT_EQ(all_strategies().size(), 5u);
  EXPECT_THROW(parse_strategy("sneaky"), InvalidInput);
}

TEST(VerifyBudget, Examples) {
  const auto c = SymbolString::parse("0110", 2);
  EXPECT_TRUE(verify_budget(c, c, 0));
  EXPECT_FALSE(verify_budget(SymbolString::parse("00", 2), SymbolString::parse("11", 2), 1));
  EXPECT_FALSE(verify_budget(SymbolString::parse("00", 2), SymbolString::parse("11", 2), 3));
  EXPECT_TRUE(verify_budget(SymbolString::parse("00", 2), SymbolString::parse("11", 2), 4));
  EXPECT_THROW(verify_budget(c, SymbolString::parse("0110", 3), 1), InvalidInput);
}

TEST(Plan, TextRoundTrip) {
  auto t = highrate_target(6);
  t.context.layout = &t.layout;
  const auto r = corrupt(t.word, 9, Strategy::BlockShift, 42, t.context);
  std::stringstream io;
  write_plan(io, r.plan);
  const auto back = read_plan(io);
  EXPECT_EQ(back.edits, r.plan.edits);
  EXPECT_EQ(back.budget, 9u);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_EQ(back.strategy, Strategy::BlockShift);
  EXPECT_EQ(apply_plan(t.word, back), r.output);
}

TEST(Plan, MalformedLinesRejected) {
  std::stringstream bad("# strategy=uniform\nX 3\n");
  EXPECT_THROW(read_plan(bad), InvalidInput);
  std::stringstream trailing("D 3 4\n");
  EXPECT_THROW(read_plan(trailing), InvalidInput);
}

TEST(Plan, OutOfRangeEditRejected) {
  CorruptionPlan plan;
  plan.edits.push_back({Edit::Op::Delete, 4, 0});
  EXPECT_THROW(apply_plan(SymbolString::parse("0101", 2), plan), InvalidInput);
  plan.edits = {{Edit::Op::Insert, 1, 2}};
  EXPECT_THROW(apply_plan(SymbolString::parse("0101", 2), plan), InvalidInput);
}

}  // namespace
}  // namespace insdel
