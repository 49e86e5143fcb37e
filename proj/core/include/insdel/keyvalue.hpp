#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "insdel/highrate.hpp"
#include "insdel/listconcat.hpp"

namespace insdel {

/// A code description on disk: key=value parameters, a "[table]" line, then
/// the inner table. Loading rebuilds the spec from the parameters and the
/// table and re-verifies every claim, including the table header.
struct SpecFile {
  /// "highrate", "highnoise", "kary" or "custom".
  std::string regime;
  std::variant<HighRateSpec, ConcatCodeSpec> spec;

  bool is_highrate() const noexcept { return std::holds_alternative<HighRateSpec>(spec); }
  const HighRateSpec& highrate() const { return std::get<HighRateSpec>(spec); }
  const ConcatCodeSpec& concat() const { return std::get<ConcatCodeSpec>(spec); }
  unsigned alphabet_size() const;
};

void write_spec(std::ostream& out, const SpecFile& file);
/// Throws InvalidInput when a parameter is missing or a claim fails.
SpecFile read_spec(std::istream& in);

}  // namespace insdel
