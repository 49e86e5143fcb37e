#include "cli_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "insdel/error.hpp"
#include "insdel/seqkit.hpp"

namespace insdel::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

BuildMode parse_mode(const std::string& mode) {
  if (mode == "paper") return BuildMode::Paper;
  if (mode == "explicit") return BuildMode::Explicit;
  throw InvalidInput("mode must be paper or explicit, got '" + mode + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

}  // namespace

SpecFile build_spec(const BuildOptions& o) {
  const BuildMode mode = parse_mode(o.mode);
  SearchOptions search;
  search.node_budget = o.node_budget;
  SpecFile file;
  file.regime = o.regime;
  if (o.regime == "highrate") {
    if (mode == BuildMode::Paper) {
      file.spec = build_highrate_paper(o.eps, o.q);
      return file;
    }
    HighRateParams p;
    p.delta = o.delta;
    p.m = o.m;
    p.h = o.h;
    p.theta_buf = o.theta_buf;
    p.beta = o.beta;
    p.outer_dimension = o.d;
    p.search = search;
    file.spec = build_highrate_explicit(o.q, p);
    return file;
  }
  ConcatParams p;
  p.k = o.k;
  p.m = o.m;
  p.outer_dimension = o.d;
  p.gamma = o.gamma;
  p.inner_fraction = o.inner_fraction;
  p.search = search;
  if (o.regime == "highnoise") {
    file.spec = build_highnoise(o.eps, o.q, mode, p);
  } else if (o.regime == "kary") {
    file.spec = build_kary(o.k, o.eps, o.q, mode, p);
  } else if (o.regime == "custom") {
    if (o.table_path.empty()) throw InvalidInput("custom regime needs --table");
    std::ifstream in(o.table_path);
    if (!in) throw InvalidInput("cannot open " + o.table_path);
    CodeTable table = read_table(in, true);
    auto field = std::make_shared<const Field>(Field::of_order(o.q));
    if (o.d == 0) throw InvalidInput("custom regime needs --d");
    file.spec = make_concat_spec(RSCodeSpec::make(field, o.d), std::move(table), o.delta, o.gamma);
  } else {
    throw InvalidInput("unknown regime '" + o.regime + "'");
  }
  return file;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_spec(in);
}

void save_spec(const std::string& path, const SpecFile& spec) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  write_spec(out, spec);
}

Codec::Codec(SpecFile spec) : spec_(std::move(spec)) {
  layout_ = spec_.is_highrate() ? highrate_layout(spec_.highrate()) : concat_layout(spec_.concat());
}

const Field& Codec::field() const {
  return spec_.is_highrate() ? *spec_.highrate().outer.field : *spec_.concat().outer.field;
}

std::size_t Codec::dimension() const {
  return spec_.is_highrate() ? spec_.highrate().outer.d : spec_.concat().outer.d;
}

std::size_t Codec::block_length() const {
  return spec_.is_highrate() ? spec_.highrate().block_length() : spec_.concat().block_length();
}

std::string Codec::describe() const {
  std::ostringstream out;
  if (spec_.is_highrate()) {
    const auto& s = spec_.highrate();
    out << "q=" << s.q << ";h=" << s.h << ";d=" << s.outer.d << ";m=" << s.m() << ";N=" << s.block_length()
        << ";delta=" << num(s.delta) << ";T=" << s.design_budget;
  } else {
    const auto& s = spec_.concat();
    out << "q=" << s.q() << ";d=" << s.outer.d << ";k=" << s.inner.alphabet_size << ";m=" << s.m()
        << ";N=" << s.block_length() << ";delta=" << num(s.delta) << ";gamma=" << num(s.gamma);
  }
  return out.str();
}

SymbolString Codec::encode(const Poly& message) const {
  return spec_.is_highrate() ? hr_encode(spec_.highrate(), message) : concat_encode(spec_.concat(), message);
}

std::optional<Poly> Codec::decode(const SymbolString& s) const {
  return spec_.is_highrate() ? hr_decode(spec_.highrate(), s) : list_concat_decode(spec_.concat(), s);
}

Poly Codec::random_message(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> coeff(0, field().order() - 1);
  std::vector<FieldElement> c(dimension());
  for (auto& x : c) x = static_cast<FieldElement>(coeff(rng));
  return Poly(std::move(c));
}

ChannelContext Codec::channel_context(const Poly& truth) const {
  ChannelContext ctx;
  ctx.layout = &layout_;
  if (spec_.is_highrate()) {
    const auto& s = spec_.highrate();
    ctx.buffer_length = s.buffer_length;
    ctx.buffer_ones = s.buffer_ones();
    const auto word = rs_encode(s.outer, truth);
    ctx.probe = [&s, word](const SymbolString& received) {
      HighRateTrace trace;
      hr_decode(s, received, &trace);
      double damage = 0;
      for (std::size_t i = 0; i < s.n; ++i) {
        if (!trace.received[i]) {
          damage += 1;
        } else if (*trace.received[i] != word[i]) {
          damage += 2;
        }
      }
      return damage;
    };
  } else {
    const auto& s = spec_.concat();
    ctx.probe = [&s, truth](const SymbolString& received) {
      const auto j = window_sweep(s, received);
      return static_cast<double>(j.size()) - 2.0 * static_cast<double>(j.agreement(*s.outer.field, truth));
    };
  }
  return ctx;
}

Poly parse_message(const Field& field, const std::string& text, std::size_t dimension) {
  std::vector<FieldElement> coeffs;
  for (const auto& part : split(text, ',')) {
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InvalidInput("bad message coefficient '" + part + "'");
    }
    if (v >= field.order()) throw InvalidInput("message coefficient " + part + " outside the field");
    coeffs.push_back(static_cast<FieldElement>(v));
  }
  if (coeffs.size() > dimension) {
    throw InvalidInput("message has " + std::to_string(coeffs.size()) + " coefficients, dimension is " +
                       std::to_string(dimension));
  }
  return Poly(std::move(coeffs));
}

std::string format_message(const Poly& message, std::size_t dimension) {
  std::string out;
  for (std::size_t i = 0; i < dimension; ++i) {
    if (i) out.push_back(',');
    out += std::to_string(message.coeff(i));
  }
  return out;
}

SymbolString read_word(const std::string& path, unsigned alphabet_size) {
  seqkit::StringFile file;
  if (path == "-") {
    file = seqkit::read_strings(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    file = seqkit::read_strings(in);
  }
  if (file.strings.size() != 1) throw InvalidInput(path + " must hold exactly one string");
  if (file.alphabet_size != alphabet_size) {
    throw InvalidInput(path + " has alphabet " + std::to_string(file.alphabet_size) + ", code uses " +
                       std::to_string(alphabet_size));
  }
  return file.strings.front();
}

void write_word(std::ostream& out, const SymbolString& word) {
  seqkit::write_strings(out, {word.alphabet_size(), {word}});
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void run_experiment(const Codec& codec, const ExperimentConfig& config, std::ostream& csv) {
  for (double f : config.budget_fracs) {
    if (!(f >= 0 && f <= 2)) throw InvalidInput("budget fraction " + num(f) + " outside [0, 2]");
  }
  if (config.strategies.empty()) throw InvalidInput("no strategies given");
  csv << "regime,params,budget_fraction,budget,strategy,trials,successes,mean_decode_ms\n";
  const std::string params = codec.describe();
  const double big_n = static_cast<double>(codec.block_length());
  std::uint64_t point = 0;
  for (double f : config.budget_fracs) {
    const auto budget = static_cast<std::size_t>(std::floor(f * big_n + 1e-9));
    for (Strategy strategy : config.strategies) {
      std::size_t successes = 0;
      double total_ms = 0;
      for (std::size_t t = 0; t < config.trials; ++t) {
        std::uint64_t state = config.seed ^ (point << 32) ^ t;
        std::mt19937_64 rng(splitmix64(state));
        const Poly message = codec.random_message(rng);
        const SymbolString c = codec.encode(message);
        ChannelContext ctx = codec.channel_context(message);
        ctx.greedy_rounds = config.greedy_rounds;
        ctx.greedy_candidates = config.greedy_candidates;
        const auto corrupted = corrupt(c, budget, strategy, splitmix64(state), ctx);
        const auto start = std::chrono::steady_clock::now();
        std::optional<Poly> decoded;
        try {
          decoded = codec.decode(corrupted.output);
        } catch (const ParameterError&) {
        } catch (const ContractViolation&) {
        }
        total_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (decoded && *decoded == message) ++successes;
      }
      csv << codec.spec().regime << ',' << params << ',' << num(f) << ',' << budget << ','
          << strategy_name(strategy) << ',' << config.trials << ',' << successes << ',';
      if (config.timing && config.trials > 0) csv << num(total_ms / static_cast<double>(config.trials));
      csv << '\n';
      ++point;
    }
  }
}

std::vector<double> parse_fractions(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (end != part.c_str() + part.size()) throw InvalidInput("bad budget fraction '" + part + "'");
    // Insertions can at most double a word, so budgets beyond 2N add nothing.
    if (!(v >= 0 && v <= 2)) throw InvalidInput("budget fraction " + part + " outside [0, 2]");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("no budget fractions given");
  return out;
}

std::vector<Strategy> parse_strategies(const std::string& text) {
  if (text == "all") return all_strategies();
  std::vector<Strategy> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_strategy(part));
  return out;
}

}  // namespace insdel::cli
