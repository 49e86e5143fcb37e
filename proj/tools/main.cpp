#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "insdel/error.hpp"

namespace {

using namespace insdel;
using namespace insdel::cli;

constexpr int kExitError = 1;
constexpr int kExitDecodeFailure = 2;
constexpr int kExitChecksFailed = 3;

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

void add_build_flags(CLI::App* cmd, BuildOptions& o) {
  cmd->add_option("--regime", o.regime, "highrate, highnoise, kary or custom")
      ->check(CLI::IsMember({"highrate", "highnoise", "kary", "custom"}));
  cmd->add_option("--mode", o.mode, "paper or explicit")->check(CLI::IsMember({"paper", "explicit"}));
  cmd->add_option("--eps", o.eps, "target noise slack");
  cmd->add_option("--q", o.q, "outer field order");
  cmd->add_option("--k", o.k, "inner alphabet size");
  cmd->add_option("--m", o.m, "inner code length");
  cmd->add_option("--delta", o.delta, "inner parameter delta");
  cmd->add_option("--gamma", o.gamma, "decoder slack (0: derived from the outer rate)");
  cmd->add_option("--pack", o.h, "high-rate packing factor h");
  cmd->add_option("--beta", o.beta, "high-rate density interval as a fraction of m (0: delta/16)");
  cmd->add_option("--theta-buf", o.theta_buf, "fraction of ones a buffer may hold");
  cmd->add_option("--d", o.d, "outer RS dimension (0: regime default)");
  cmd->add_option("--inner-fraction", o.inner_fraction, "inner insdel fraction (0: regime target)");
  cmd->add_option("--node-budget", o.node_budget, "inner search node budget");
  cmd->add_option("--table", o.table_path, "inner table file for the custom regime");
}

std::ostream& output(const std::string& path, std::ofstream& file) {
  if (path == "-") return std::cout;
  file.open(path);
  if (!file) throw InvalidInput("cannot write " + path);
  return file;
}

int report_decode(const Codec& codec, const SymbolString& received, const std::string& out_path) {
  std::optional<Poly> decoded;
  try {
    decoded = codec.decode(received);
  } catch (const ContractViolation& e) {
    std::cerr << "decode-failure reason=contract-violation message=" << one_line(e.what()) << '\n';
    return kExitDecodeFailure;
  } catch (const ParameterError& e) {
    std::cerr << "decode-failure reason=parameter message=" << one_line(e.what()) << '\n';
    return kExitDecodeFailure;
  }
  if (!decoded) {
    std::cerr << "decode-failure reason=no-candidate\n";
    return kExitDecodeFailure;
  }
  std::ofstream file;
  output(out_path, file) << "message=" << format_message(*decoded, codec.dimension()) << '\n';
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Insertion/deletion codes: build, encode, corrupt, decode, verify, experiment, replay"};
  app.require_subcommand(1);

  BuildOptions build_opts;
  std::string out_path = "-";
  auto* build = app.add_subcommand("build", "construct a code and write its spec file");
  add_build_flags(build, build_opts);
  build->add_option("--out", out_path, "spec file")->required();

  std::string spec_path;
  std::string message_text;
  auto* encode = app.add_subcommand("encode", "encode a message");
  encode->add_option("--spec", spec_path, "spec file")->required();
  encode->add_option("--message", message_text, "comma-separated coefficients, lowest first")->required();
  encode->add_option("--out", out_path, "codeword file (- for stdout)");

  std::string in_path;
  std::size_t budget = 0;
  std::string strategy_text = "uniform";
  std::uint64_t seed = 0;
  std::string plan_path;
  auto* corrupt_cmd = app.add_subcommand("corrupt", "apply budgeted insertions and deletions to a codeword");
  corrupt_cmd->add_option("--spec", spec_path, "spec file")->required();
  corrupt_cmd->add_option("--in", in_path, "codeword file")->required();
  corrupt_cmd->add_option("--budget", budget, "maximum insdel distance")->required();
  corrupt_cmd->add_option("--strategy", strategy_text, "uniform, buffer-spoof, chunk-kill, block-shift, greedy");
  corrupt_cmd->add_option("--seed", seed, "channel seed")->required();
  corrupt_cmd->add_option("--out", out_path, "corrupted word file (- for stdout)");
  corrupt_cmd->add_option("--plan", plan_path, "edit script file");

  auto* decode = app.add_subcommand("decode", "decode a received word");
  decode->add_option("--spec", spec_path, "spec file")->required();
  decode->add_option("--in", in_path, "received word file (- for stdin)")->required();
  decode->add_option("--out", out_path, "message file (- for stdout)");

  VerifyEffort effort;
  auto* verify = app.add_subcommand("verify", "re-verify a spec and print its report");
  verify->add_option("--spec", spec_path, "spec file")->required();
  verify->add_option("--exhaustive-limit", effort.exhaustive_limit, "enumerate codes up to this size");
  verify->add_option("--pairs", effort.sampled_pairs, "sampled codeword pairs otherwise");
  verify->add_option("--seed", effort.seed, "sampling seed");
  verify->add_option("--out", out_path, "report file (- for stdout)");

  ExperimentConfig exp;
  std::string fracs_text = "0";
  std::string strategies_text = "all";
  auto* experiment = app.add_subcommand("experiment", "sweep budgets and strategies, one CSV row per point");
  add_build_flags(experiment, build_opts);
  experiment->add_option("--spec", spec_path, "use a saved spec instead of building");
  experiment->add_option("--budget-fracs", fracs_text, "comma-separated fractions of N in [0, 2]");
  experiment->add_option("--trials", exp.trials, "trials per point");
  experiment->add_option("--strategies", strategies_text, "comma-separated strategies or all");
  experiment->add_option("--seed", exp.seed, "root seed")->required();
  experiment->add_option("--greedy-rounds", exp.greedy_rounds, "greedy rounds per trial");
  experiment->add_flag("--timing", exp.timing, "fill the mean_decode_ms column");
  experiment->add_option("--out", out_path, "CSV file (- for stdout)");

  auto* replay = app.add_subcommand("replay", "re-apply a saved edit script and decode");
  replay->add_option("--spec", spec_path, "spec file")->required();
  replay->add_option("--in", in_path, "original codeword file")->required();
  replay->add_option("--plan", plan_path, "edit script file")->required();
  replay->add_option("--out", out_path, "message file (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error kind=usage message=" << one_line(e.what()) << '\n';
    return kExitError;
  }

  if (*build) {
    save_spec(out_path, build_spec(build_opts));
    return 0;
  }
  if (*encode) {
    const Codec codec(load_spec(spec_path));
    const Poly message = parse_message(codec.field(), message_text, codec.dimension());
    std::ofstream file;
    write_word(output(out_path, file), codec.encode(message));
    return 0;
  }
  if (*corrupt_cmd) {
    const Codec codec(load_spec(spec_path));
    const SymbolString c = read_word(in_path, codec.alphabet_size());
    const Strategy strategy = parse_strategy(strategy_text);
    ChannelContext ctx;
    if (strategy == Strategy::Greedy) {
      auto truth = codec.decode(c);
      if (!truth || codec.encode(*truth) != c) throw InvalidInput("greedy corruption needs a valid codeword as input");
      ctx = codec.channel_context(*truth);
    } else {
      ctx.layout = &codec.layout();
      if (codec.spec().is_highrate()) {
        ctx.buffer_length = codec.spec().highrate().buffer_length;
        ctx.buffer_ones = codec.spec().highrate().buffer_ones();
      }
    }
    const auto result = corrupt(c, budget, strategy, seed, ctx);
    std::ofstream file;
    write_word(output(out_path, file), result.output);
    if (!plan_path.empty()) {
      std::ofstream plan(plan_path);
      if (!plan) throw InvalidInput("cannot write " + plan_path);
      write_plan(plan, result.plan);
    }
    return 0;
  }
  if (*decode) {
    const Codec codec(load_spec(spec_path));
    return report_decode(codec, read_word(in_path, codec.alphabet_size()), out_path);
  }
  if (*verify) {
    const SpecFile spec = load_spec(spec_path);
    const RegimeReport report =
        spec.is_highrate() ? verify_code(spec.highrate(), effort) : verify_code(spec.concat(), effort, spec.regime);
    std::ofstream file;
    write_report(output(out_path, file), report);
    return report.passed() ? 0 : kExitChecksFailed;
  }
  if (*experiment) {
    const Codec codec(spec_path.empty() ? build_spec(build_opts) : load_spec(spec_path));
    exp.budget_fracs = parse_fractions(fracs_text);
    exp.strategies = parse_strategies(strategies_text);
    std::ofstream file;
    run_experiment(codec, exp, output(out_path, file));
    return 0;
  }
  if (*replay) {
    const Codec codec(load_spec(spec_path));
    const SymbolString c = read_word(in_path, codec.alphabet_size());
    std::ifstream plan_in(plan_path);
    if (!plan_in) throw InvalidInput("cannot open " + plan_path);
    const CorruptionPlan plan = read_plan(plan_in);
    const SymbolString s = apply_plan(c, plan);
    if (!verify_budget(c, s, plan.budget)) throw ContractViolation("replayed plan exceeds its recorded budget");
    return report_decode(codec, s, out_path);
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const insdel::Error& e) {
    std::cerr << "error kind=" << e.kind() << " message=" << one_line(e.what()) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error kind=internal message=" << one_line(e.what()) << '\n';
  }
  return kExitError;
}
