#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "insdel/channel.hpp"
#include "insdel/keyvalue.hpp"
#include "insdel/regimes.hpp"

namespace insdel::cli {

/// Construction flags shared by build and experiment.
struct BuildOptions {
  std::string regime = "highrate";
  std::string mode = "explicit";
  double eps = 0.5;
  std::uint64_t q = 16;
  unsigned k = 2;
  std::size_t m = 16;
  double delta = 0.25;
  double gamma = 0;
  unsigned h = 1;
  double beta = 0;
  double theta_buf = kDefaultBufferOnes;
  std::size_t d = 0;
  double inner_fraction = 0;
  std::size_t node_budget = 200'000'000;
  std::string table_path;
};

SpecFile build_spec(const BuildOptions& options);
SpecFile load_spec(const std::string& path);
void save_spec(const std::string& path, const SpecFile& spec);

/// Uniform view of the two code families.
class Codec {
 public:
  explicit Codec(SpecFile spec);

  const SpecFile& spec() const noexcept { return spec_; }
  const Field& field() const;
  std::size_t dimension() const;
  std::size_t block_length() const;
  unsigned alphabet_size() const { return spec_.alphabet_size(); }
  const Layout& layout() const noexcept { return layout_; }
  /// "q=..;d=..;..." summary used in CSV rows.
  std::string describe() const;

  SymbolString encode(const Poly& message) const;
  /// nullopt on decode failure; decoder contract errors propagate.
  std::optional<Poly> decode(const SymbolString& s) const;
  Poly random_message(std::mt19937_64& rng) const;
  /// Channel context aimed at this code, with a probe scoring damage
  /// against the true message.
  ChannelContext channel_context(const Poly& truth) const;

 private:
  SpecFile spec_;
  Layout layout_;
};

Poly parse_message(const Field& field, const std::string& text, std::size_t dimension);
std::string format_message(const Poly& message, std::size_t dimension);

SymbolString read_word(const std::string& path, unsigned alphabet_size);
void write_word(std::ostream& out, const SymbolString& word);

std::uint64_t splitmix64(std::uint64_t& state);

struct ExperimentConfig {
  std::vector<double> budget_fracs;
  std::size_t trials = 10;
  std::vector<Strategy> strategies;
  std::uint64_t seed = 0;
  bool timing = false;
  std::size_t greedy_rounds = 8;
  std::size_t greedy_candidates = 4;
};

/// One CSV row per (budget fraction, strategy), in config order.
void run_experiment(const Codec& codec, const ExperimentConfig& config, std::ostream& csv);

std::vector<double> parse_fractions(const std::string& text);
std::vector<Strategy> parse_strategies(const std::string& text);

}  // namespace insdel::cli
