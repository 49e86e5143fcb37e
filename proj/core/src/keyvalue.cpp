#include "insdel/keyvalue.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>

#include "insdel/error.hpp"
#include "text_util.hpp"

namespace insdel {

namespace {

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class Params {
 public:
  explicit Params(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  const std::string& text(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw InvalidInput("spec file lacks " + key + "=");
    return it->second;
  }
  bool has(const std::string& key) const { return values_.contains(key); }
  template <typename T>
  T integer(const std::string& key) const {
    return detail::parse_unsigned<T>(text(key), key);
  }
  double real(const std::string& key) const {
    const std::string& s = text(key);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw InvalidInput("bad number for " + key + ": '" + s + "'");
    return v;
  }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace

unsigned SpecFile::alphabet_size() const {
  return is_highrate() ? highrate().inner.alphabet_size : concat().inner.alphabet_size;
}

void write_spec(std::ostream& out, const SpecFile& file) {
  out << "regime=" << file.regime << '\n';
  if (file.is_highrate()) {
    const auto& s = file.highrate();
    out << "q=" << s.q << '\n';
    out << "h=" << s.h << '\n';
    out << "d=" << s.outer.d << '\n';
    out << "delta=" << exact(s.delta) << '\n';
    out << "beta=" << exact(s.beta) << '\n';
    out << "theta_buf=" << exact(s.theta_buf) << '\n';
    out << "design_budget=" << s.design_budget << '\n';
    out << "[table]\n";
    write_table(out, s.inner);
    return;
  }
  const auto& s = file.concat();
  out << "q=" << s.q() << '\n';
  out << "d=" << s.outer.d << '\n';
  out << "delta=" << exact(s.delta) << '\n';
  out << "gamma=" << exact(s.gamma) << '\n';
  out << "[table]\n";
  write_table(out, s.inner);
}

SpecFile read_spec(std::istream& in) {
  std::map<std::string, std::string> values;
  std::string line;
  bool table_follows = false;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line == "[table]") {
      table_follows = true;
      break;
    }
    auto kv = detail::split_key_value(line);
    if (!kv) throw InvalidInput("spec line is not key=value: '" + line + "'");
    if (!values.emplace(kv->first, kv->second).second) throw InvalidInput("duplicate spec key " + kv->first);
  }
  if (!table_follows) throw InvalidInput("spec file lacks a [table] section");
  const Params p(std::move(values));
  CodeTable table = read_table(in, true);

  SpecFile file;
  file.regime = p.text("regime");
  const auto q = p.integer<std::uint64_t>("q");
  if (file.regime == "highrate") {
    HighRateParams params;
    params.delta = p.real("delta");
    params.m = table.length;
    params.h = p.integer<unsigned>("h");
    params.theta_buf = p.real("theta_buf");
    params.beta = p.real("beta");
    params.outer_dimension = p.integer<std::size_t>("d");
    if (params.outer_dimension == 0) throw InvalidInput("d must be positive");
    HighRateSpec spec = assemble_highrate(q, params, std::move(table));
    if (p.has("design_budget") && p.integer<std::size_t>("design_budget") != spec.design_budget) {
      throw InvalidInput("design_budget claim " + p.text("design_budget") + " does not match the recomputed " +
                         std::to_string(spec.design_budget));
    }
    file.spec = std::move(spec);
    return file;
  }
  if (file.regime != "highnoise" && file.regime != "kary" && file.regime != "custom") {
    throw InvalidInput("unknown regime '" + file.regime + "'");
  }
  auto field = std::make_shared<const Field>(Field::of_order(q));
  const auto d = p.integer<std::size_t>("d");
  file.spec = make_concat_spec(RSCodeSpec::make(field, d), std::move(table), p.real("delta"), p.real("gamma"));
  return file;
}

}  // namespace insdel
