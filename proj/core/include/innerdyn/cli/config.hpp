#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "innerdyn/numerics/circle_point.hpp"
#include "innerdyn/numerics/precision.hpp"

namespace innerdyn::cli {

using num::BigReal;
using num::Bits;
using num::CirclePoint;
using num::PrecisionPolicy;

enum class ExperimentKind {
  Orbit,
  Rate,
  Summability,
  TheoremA,
  Targets,
  PullbackCheck,
  BoundCheck,
  ArcIdentity,
  Wolff,
};

const char* to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_kind(std::string_view text);

/// Validated `key = value` experiment description.
///
/// Values are kept as the text the user wrote, so serialize/parse is an exact
/// round trip; typed accessors interpret them on demand. Numeric values are
/// decimal literals or fractions p/q, optionally followed by "pi" for angles
/// ("1/2pi"); they are parsed at policy.max_bits.
class ExperimentConfig {
 public:
  /// Throws ConfigError naming the offending key or line.
  static ExperimentConfig parse(std::string_view text);
  static ExperimentConfig load(const std::filesystem::path& path);

  /// Canonical text: schema and kind first, then the remaining keys sorted.
  std::string serialize() const;

  const std::map<std::string, std::string>& values() const noexcept { return values_; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  /// Sets a key after validating it. Throws ConfigError.
  void set(const std::string& key, const std::string& value);

  ExperimentKind kind() const;
  PrecisionPolicy policy() const;
  /// Precision for parsed decimals.
  Bits parse_bits() const { return policy().max_bits; }

  const std::string& text(const std::string& key) const;
  std::string text_or(const std::string& key, const std::string& fallback) const;
  long integer(const std::string& key) const;
  long integer_or(const std::string& key, long fallback) const;
  std::uint64_t unsigned_integer(const std::string& key) const;
  std::uint64_t unsigned_or(const std::string& key, std::uint64_t fallback) const;
  BigReal decimal(const std::string& key) const;
  BigReal decimal_or(const std::string& key, std::string_view fallback) const;
  std::optional<BigReal> optional_decimal(const std::string& key) const;
  std::optional<CirclePoint> optional_point(const std::string& key) const;
  /// Comma-separated numbers.
  std::vector<BigReal> decimal_list(const std::string& key) const;
  bool flag_or(const std::string& key, bool fallback) const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;

 private:
  void validate() const;
  std::map<std::string, std::string> values_;
};

/// "0.1", "-2.5e-3", "1/3", "pi", "3/2pi"; throws ConfigError on anything else.
BigReal parse_number(std::string_view text, Bits prec);

}  // namespace innerdyn::cli
