#include "insdel/channel.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "insdel/error.hpp"
#include "insdel/seqkit.hpp"
#include "text_util.hpp"

namespace insdel {

namespace {

constexpr std::pair<Strategy, std::string_view> kNames[] = {
    {Strategy::Uniform, "uniform"},       {Strategy::BufferSpoof, "buffer-spoof"},
    {Strategy::ChunkKill, "chunk-kill"},  {Strategy::BlockShift, "block-shift"},
    {Strategy::Greedy, "greedy"},
};

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Symbol random_symbol(Rng& rng, unsigned k) { return static_cast<Symbol>(pick(rng, k)); }

void apply_edit(SymbolString& s, const Edit& e) {
  if (e.op == Edit::Op::Delete) {
    if (e.pos >= s.size()) throw InvalidInput("deletion at " + std::to_string(e.pos) + " past end");
    s.erase(e.pos);
  } else {
    if (e.pos > s.size()) throw InvalidInput("insertion at " + std::to_string(e.pos) + " past end");
    if (e.symbol >= s.alphabet_size()) throw InvalidInput("inserted symbol outside the alphabet");
    s.insert(e.pos, e.symbol);
  }
}

// Edits chosen in source coordinates, materialized right to left so that
// every position still refers to the untouched prefix.
class SourceEdits {
 public:
  explicit SourceEdits(std::size_t length) : length_(length) {}

  bool erase(std::size_t pos) { return pos < length_ && deleted_.insert(pos).second; }
  void insert(std::size_t gap, Symbol s) { inserts_.emplace(std::min(gap, length_), s); }
  std::size_t count() const { return deleted_.size() + inserts_.size(); }

  std::vector<Edit> script() const {
    std::vector<Edit> out;
    auto d = deleted_.rbegin();
    auto i = inserts_.rbegin();
    while (d != deleted_.rend() || i != inserts_.rend()) {
      // At equal positions the deletion lies right of the gap.
      if (i == inserts_.rend() || (d != deleted_.rend() && *d >= i->first)) {
        out.push_back({Edit::Op::Delete, *d++, 0});
      } else {
        out.push_back({Edit::Op::Insert, i->first, i->second});
        ++i;
      }
    }
    return out;
  }

 private:
  std::size_t length_;
  std::set<std::size_t> deleted_;
  std::multimap<std::size_t, Symbol> inserts_;
};

std::vector<Edit> uniform_edits(SymbolString work, std::size_t budget, Rng& rng) {
  std::vector<Edit> edits;
  for (std::size_t b = 0; b < budget; ++b) {
    Edit e;
    if (!work.empty() && pick(rng, 2) == 0) {
      e = {Edit::Op::Delete, pick(rng, work.size()), 0};
    } else {
      e = {Edit::Op::Insert, pick(rng, work.size() + 1), random_symbol(rng, work.alphabet_size())};
    }
    apply_edit(work, e);
    edits.push_back(e);
  }
  return edits;
}

std::vector<Span> blocks_or_slices(const SymbolString& c, const ChannelContext& ctx, Rng& rng) {
  if (ctx.layout && !ctx.layout->blocks.empty()) return ctx.layout->blocks;
  // Without a layout, aim at random stretches of the word.
  std::vector<Span> spans;
  const std::size_t width = std::max<std::size_t>(2, c.size() / 16);
  for (std::size_t i = 0; i < 16 && c.size() > 0; ++i) {
    const std::size_t b = pick(rng, c.size());
    spans.push_back({b, std::min(c.size(), b + width)});
  }
  return spans;
}

std::vector<Edit> buffer_spoof(const SymbolString& c, std::size_t budget, const ChannelContext& ctx, Rng& rng) {
  SourceEdits edits(c.size());
  const std::size_t run = std::max<std::size_t>(1, ctx.buffer_length);
  auto spans = blocks_or_slices(c, ctx, rng);
  std::shuffle(spans.begin(), spans.end(), rng);
  for (std::size_t s = 0; edits.count() < budget && !spans.empty(); ++s) {
    const Span& span = spans[s % spans.size()];
    const std::size_t gap = span.begin + (span.length() > 1 ? 1 + pick(rng, span.length() - 1) : 0);
    const std::size_t len = std::min(run, budget - edits.count());
    for (std::size_t i = 0; i < len; ++i) edits.insert(gap, 0);
  }
  return edits.script();
}

std::vector<Edit> chunk_kill(const SymbolString& c, std::size_t budget, const ChannelContext& ctx, Rng& rng) {
  SourceEdits edits(c.size());
  const Symbol one = c.alphabet_size() > 1 ? 1 : 0;
  std::vector<Span> chunks;
  if (ctx.layout) chunks = ctx.layout->chunks;
  if (chunks.empty()) {
    // Zero runs of the word stand in for chunks.
    std::size_t start = 0;
    for (std::size_t i = 0; i <= c.size(); ++i) {
      if (i == c.size() || c[i] != 0) {
        if (i > start + 1) chunks.push_back({start, i});
        start = i + 1;
      }
    }
  }
  std::shuffle(chunks.begin(), chunks.end(), rng);
  const std::size_t per_chunk = ctx.buffer_ones + 1;
  for (std::size_t s = 0; edits.count() < budget && !chunks.empty(); ++s) {
    const Span& span = chunks[s % chunks.size()];
    const std::size_t gap = span.begin + span.length() / 2;
    const std::size_t len = std::min(per_chunk, budget - edits.count());
    for (std::size_t i = 0; i < len; ++i) edits.insert(gap, one);
  }
  return edits.script();
}

std::vector<Edit> block_shift(const SymbolString& c, std::size_t budget, const ChannelContext& ctx, Rng& rng) {
  SourceEdits edits(c.size());
  const auto spans = blocks_or_slices(c, ctx, rng);
  if (spans.empty()) return {};
  std::size_t stalls = 0;
  while (edits.count() < budget && stalls < 4 * spans.size()) {
    const std::size_t before = edits.count();
    const Span& cut = spans[pick(rng, spans.size())];
    const Span& pad = spans[pick(rng, spans.size())];
    const std::size_t room = budget - edits.count();
    const std::size_t len = std::max<std::size_t>(1, std::min(room / 2, std::max<std::size_t>(1, cut.length() / 2)));
    for (std::size_t i = 0; i < len && edits.count() < budget; ++i) edits.erase(cut.begin + i);
    const std::size_t gap = pad.begin + pick(rng, pad.length() + 1);
    for (std::size_t i = 0; i < len && edits.count() < budget; ++i) edits.insert(gap, random_symbol(rng, c.alphabet_size()));
    stalls = edits.count() == before ? stalls + 1 : 0;
  }
  return edits.script();
}

// One greedy candidate: scattered edits, a deletion burst or an insertion
// burst of a single symbol, all on the current word.
std::vector<Edit> greedy_batch(const SymbolString& work, std::size_t size, std::size_t variant, Rng& rng) {
  if (variant % 3 == 0 || work.empty()) return uniform_edits(work, size, rng);
  std::vector<Edit> edits;
  if (variant % 3 == 1) {
    const std::size_t len = std::min(size, work.size());
    const std::size_t at = pick(rng, work.size() - len + 1);
    for (std::size_t i = 0; i < len; ++i) edits.push_back({Edit::Op::Delete, at, 0});
    return edits;
  }
  const std::size_t at = pick(rng, work.size() + 1);
  const Symbol s = random_symbol(rng, work.alphabet_size());
  for (std::size_t i = 0; i < size; ++i) edits.push_back({Edit::Op::Insert, at, s});
  return edits;
}

std::vector<Edit> greedy(const SymbolString& c, std::size_t budget, const ChannelContext& ctx, Rng& rng) {
  if (!ctx.probe) throw InvalidInput("greedy strategy needs a probe");
  std::vector<Edit> chosen;
  SymbolString work = c;
  const std::size_t rounds = std::max<std::size_t>(1, std::min(ctx.greedy_rounds, budget));
  const std::size_t candidates = std::max<std::size_t>(1, ctx.greedy_candidates);
  std::size_t remaining = budget;
  for (std::size_t r = 0; r < rounds && remaining > 0; ++r) {
    const std::size_t size = std::max<std::size_t>(1, remaining / (rounds - r));
    std::vector<Edit> best;
    SymbolString best_word;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < candidates; ++k) {
      auto batch = greedy_batch(work, size, k, rng);
      SymbolString trial = work;
      for (const auto& e : batch) apply_edit(trial, e);
      const double score = ctx.probe(trial);
      if (score > best_score) {
        best_score = score;
        best = std::move(batch);
        best_word = std::move(trial);
      }
    }
    remaining -= best.size();
    chosen.insert(chosen.end(), best.begin(), best.end());
    work = std::move(best_word);
  }
  return chosen;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  for (const auto& [value, name] : kNames) {
    if (value == s) return name;
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (const auto& [value, text] : kNames) {
    if (text == name) return value;
  }
  throw InvalidInput("unknown strategy '" + std::string(name) + "'");
}

const std::vector<Strategy>& all_strategies() {
  static const std::vector<Strategy> all = {Strategy::Uniform, Strategy::BufferSpoof, Strategy::ChunkKill,
                                            Strategy::BlockShift, Strategy::Greedy};
  return all;
}

Corruption corrupt(const SymbolString& c, std::size_t budget, Strategy strategy, std::uint64_t seed,
                   const ChannelContext& context) {
  Rng rng(seed);
  Corruption result;
  result.plan.budget = budget;
  result.plan.strategy = strategy;
  result.plan.seed = seed;
  if (budget > 0) {
    switch (strategy) {
      case Strategy::Uniform: result.plan.edits = uniform_edits(c, budget, rng); break;
      case Strategy::BufferSpoof: result.plan.edits = buffer_spoof(c, budget, context, rng); break;
      case Strategy::ChunkKill: result.plan.edits = chunk_kill(c, budget, context, rng); break;
      case Strategy::BlockShift: result.plan.edits = block_shift(c, budget, context, rng); break;
      case Strategy::Greedy: result.plan.edits = greedy(c, budget, context, rng); break;
    }
  } else if (strategy == Strategy::Greedy && !context.probe) {
    throw InvalidInput("greedy strategy needs a probe");
  }
  result.output = apply_plan(c, result.plan);
  if (result.plan.edits.size() > budget || !verify_budget(c, result.output, budget)) {
    throw ContractViolation(std::string(strategy_name(strategy)) + " exceeded its budget of " +
                            std::to_string(budget));
  }
  return result;
}

SymbolString apply_plan(const SymbolString& source, const CorruptionPlan& plan) {
  SymbolString out = source;
  for (const auto& e : plan.edits) apply_edit(out, e);
  return out;
}

bool verify_budget(const SymbolString& c, const SymbolString& s, std::size_t budget) {
  if (c.alphabet_size() != s.alphabet_size()) throw InvalidInput("alphabet mismatch");
  return seqkit::insdel_distance(c, s) <= budget;
}

void write_plan(std::ostream& out, const CorruptionPlan& plan) {
  out << "# strategy=" << strategy_name(plan.strategy) << '\n';
  out << "# seed=" << plan.seed << '\n';
  out << "# budget=" << plan.budget << '\n';
  for (const auto& e : plan.edits) {
    if (e.op == Edit::Op::Delete) {
      out << "D " << e.pos << '\n';
    } else {
      out << "I " << e.pos << ' ' << e.symbol << '\n';
    }
  }
}

CorruptionPlan read_plan(std::istream& in) {
  CorruptionPlan plan;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = detail::trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      auto kv = detail::split_key_value(text.substr(1));
      if (!kv) continue;
      if (kv->first == "strategy") plan.strategy = parse_strategy(kv->second);
      if (kv->first == "seed") plan.seed = detail::parse_unsigned<std::uint64_t>(kv->second, "seed");
      if (kv->first == "budget") plan.budget = detail::parse_unsigned<std::size_t>(kv->second, "budget");
      continue;
    }
    std::istringstream fields{std::string(text)};
    std::string op;
    std::string pos;
    std::string sym;
    std::string extra;
    fields >> op >> pos;
    Edit e;
    e.pos = detail::parse_unsigned<std::size_t>(pos, "edit position");
    if (op == "D") {
      e.op = Edit::Op::Delete;
    } else if (op == "I" && (fields >> sym)) {
      e.op = Edit::Op::Insert;
      e.symbol = detail::parse_unsigned<Symbol>(sym, "inserted symbol");
    } else {
      throw InvalidInput("plan line " + std::to_string(lineno) + ": expected 'D <pos>' or 'I <pos> <symbol>'");
    }
    if (fields >> extra) throw InvalidInput("plan line " + std::to_string(lineno) + ": trailing text");
    plan.edits.push_back(e);
  }
  return plan;
}

}  // namespace insdel
