#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "insdel/layout.hpp"
#include "insdel/symbol_string.hpp"

namespace insdel {

enum class Strategy { Uniform, BufferSpoof, ChunkKill, BlockShift, Greedy };

/// "uniform", "buffer-spoof", "chunk-kill", "block-shift", "greedy".
std::string_view strategy_name(Strategy s);
/// Throws InvalidInput on an unknown name.
Strategy parse_strategy(std::string_view name);
const std::vector<Strategy>& all_strategies();

struct Edit {
  enum class Op { Delete, Insert };
  Op op = Op::Delete;
  /// Position in the string as it stands when the edit is applied.
  std::size_t pos = 0;
  Symbol symbol = 0;

  friend bool operator==(const Edit&, const Edit&) = default;
};

/// Edit script applied in order to the source word.
struct CorruptionPlan {
  std::vector<Edit> edits;
  std::size_t budget = 0;
  Strategy strategy = Strategy::Uniform;
  std::uint64_t seed = 0;
};

/// Damage score of a candidate received word; Greedy keeps the edits that
/// raise it most.
using Probe = std::function<double(const SymbolString&)>;

/// Optional knowledge the targeted strategies aim with.
struct ChannelContext {
  /// Positions of inner blocks and zero chunks in the source word.
  const Layout* layout = nullptr;
  /// Length of the zero run the buffer scanner looks for.
  std::size_t buffer_length = 0;
  /// Ones a detected buffer may hold.
  std::size_t buffer_ones = 0;
  Probe probe;
  /// Candidate batches compared per greedy round.
  std::size_t greedy_candidates = 4;
  /// Greedy rounds; each spends about budget/rounds edits.
  std::size_t greedy_rounds = 8;
};

struct Corruption {
  SymbolString output;
  CorruptionPlan plan;
};

/// Deterministic in (c, budget, strategy, seed, context). The result is
/// checked to lie within insdel distance `budget` of c. Greedy requires a probe.
Corruption corrupt(const SymbolString& c, std::size_t budget, Strategy strategy, std::uint64_t seed,
                   const ChannelContext& context = {});

/// Replays the script; throws InvalidInput on an edit out of range.
SymbolString apply_plan(const SymbolString& source, const CorruptionPlan& plan);

/// True iff insdel_distance(c, s) <= budget.
bool verify_budget(const SymbolString& c, const SymbolString& s, std::size_t budget);

/// "# key=value" metadata lines, then "D <pos>" or "I <pos> <symbol>" per edit.
void write_plan(std::ostream& out, const CorruptionPlan& plan);
CorruptionPlan read_plan(std::istream& in);

}  // namespace insdel
