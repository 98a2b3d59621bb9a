#include "innerdyn/cli/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

#include "innerdyn/errors.hpp"

namespace innerdyn::cli {

namespace {

enum class ValueType { Integer, Unsigned, Number, NumberList, Flag, Text, Kind, Mode, Variant, RadiusRule, FunctionVariant, Zeros };

struct KeySpec {
  std::string_view key;
  ValueType type;
};

constexpr std::array kKeys{
    KeySpec{"schema", ValueType::Integer},
    KeySpec{"kind", ValueType::Kind},
    KeySpec{"out", ValueType::Text},
    KeySpec{"policy.base_bits", ValueType::Integer},
    KeySpec{"policy.max_bits", ValueType::Integer},
    KeySpec{"policy.agreement_tol_bits", ValueType::Integer},
    KeySpec{"p", ValueType::Number},
    KeySpec{"alpha", ValueType::Number},
    KeySpec{"epsilon", ValueType::Number},
    KeySpec{"delta", ValueType::Number},
    KeySpec{"c", ValueType::Number},
    KeySpec{"c_safety", ValueType::Number},
    KeySpec{"eta", ValueType::NumberList},
    KeySpec{"w_max", ValueType::Number},
    KeySpec{"max_excluded_fraction", ValueType::Number},
    KeySpec{"start", ValueType::Number},
    KeySpec{"samples", ValueType::Unsigned},
    KeySpec{"seed", ValueType::Unsigned},
    KeySpec{"outcomes_limit", ValueType::Unsigned},
    KeySpec{"n0", ValueType::Integer},
    KeySpec{"n_enter", ValueType::Integer},
    KeySpec{"n_max", ValueType::Integer},
    KeySpec{"horizon", ValueType::Integer},
    KeySpec{"tolerance_bits", ValueType::Integer},
    KeySpec{"slack_bits", ValueType::Integer},
    KeySpec{"mode", ValueType::Mode},
    KeySpec{"variant", ValueType::Variant},
    KeySpec{"target.center", ValueType::Number},
    KeySpec{"target.complement", ValueType::Flag},
    KeySpec{"target.radius.rule", ValueType::RadiusRule},
    KeySpec{"target.radius.coefficient", ValueType::Number},
    KeySpec{"target.radius.base", ValueType::Number},
    KeySpec{"target.radius.exponent", ValueType::Number},
};

constexpr std::array<std::string_view, 6> kFunctionParams{"a", "lambda", "mass", "singularity", "rotation", "zeros"};

const std::regex& function_key() {
  static const std::regex re(R"(function((?:\.(?:outer|inner))*)(?:\.([a-z_]+))?)");
  return re;
}

std::optional<ValueType> type_of(const std::string& key) {
  for (const KeySpec& spec : kKeys) {
    if (spec.key == key) return spec.type;
  }
  std::smatch m;
  if (std::regex_match(key, m, function_key())) {
    if (!m[2].matched) return ValueType::FunctionVariant;
    const std::string param = m[2].str();
    if (param == "zeros") return ValueType::Zeros;
    if (std::find(kFunctionParams.begin(), kFunctionParams.end(), param) != kFunctionParams.end()) {
      return ValueType::Number;
    }
  }
  return std::nullopt;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <class T>
std::optional<T> parse_integral(std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

bool one_of(const std::string& value, std::initializer_list<std::string_view> options) {
  return std::find(options.begin(), options.end(), value) != options.end();
}

void check_value(const std::string& key, const std::string& value, ValueType type) {
  const auto fail = [&](const std::string& why) { throw ConfigError("key '" + key + "': " + why + " (got '" + value + "')"); };
  switch (type) {
    case ValueType::Integer:
      if (!parse_integral<long>(value)) fail("expected an integer");
      break;
    case ValueType::Unsigned:
      if (!parse_integral<std::uint64_t>(value)) fail("expected a non-negative integer");
      break;
    case ValueType::Number:
      try {
        parse_number(value, 64);
      } catch (const ConfigError&) {
        fail("expected a decimal number or fraction");
      }
      break;
    case ValueType::NumberList:
      try {
        if (split_list(value).empty()) fail("expected a comma-separated list of numbers");
        for (const std::string& item : split_list(value)) parse_number(item, 64);
      } catch (const ConfigError&) {
        fail("expected a comma-separated list of numbers");
      }
      break;
    case ValueType::Flag:
      if (!one_of(value, {"true", "false"})) fail("expected true or false");
      break;
    case ValueType::Text:
      if (value.empty()) fail("expected a value");
      break;
    case ValueType::Kind:
      if (!parse_kind(value)) fail("unknown experiment kind");
      break;
    case ValueType::Mode:
      if (!one_of(value, {"complement", "direct"})) fail("expected complement or direct");
      break;
    case ValueType::Variant:
      if (!one_of(value, {"upper", "lower"})) fail("expected upper or lower");
      break;
    case ValueType::RadiusRule:
      if (!one_of(value, {"geometric", "constant", "power_law"})) fail("expected geometric, constant or power_law");
      break;
    case ValueType::FunctionVariant:
      if (!one_of(value, {"automorphism", "blaschke", "atomic_singular", "rational2", "linear_plus_tan", "composition"})) {
        fail("unknown function variant");
      }
      break;
    case ValueType::Zeros: {
      std::stringstream ss(value);
      std::string item;
      bool any = false;
      while (std::getline(ss, item, ',')) {
        const std::string pair = trim(item);
        const auto colon = pair.find(':');
        if (colon == std::string::npos) fail("zeros are re:im pairs separated by commas");
        try {
          parse_number(pair.substr(0, colon), 64);
          parse_number(pair.substr(colon + 1), 64);
        } catch (const ConfigError&) {
          fail("zeros are re:im pairs separated by commas");
        }
        any = true;
      }
      if (!any) fail("at least one zero is required");
      break;
    }
  }
}

const std::map<ExperimentKind, std::vector<std::string>>& required_keys() {
  static const std::map<ExperimentKind, std::vector<std::string>> table{
      {ExperimentKind::Orbit, {"function", "n_max"}},
      {ExperimentKind::Rate, {"function", "n_max"}},
      {ExperimentKind::Summability, {"function", "n_max"}},
      {ExperimentKind::TheoremA, {"function", "epsilon", "samples", "seed", "n_enter", "n_max"}},
      {ExperimentKind::Targets, {"function", "samples", "seed", "horizon", "target.radius.rule", "target.radius.coefficient"}},
      {ExperimentKind::PullbackCheck, {"function", "mode", "n_max", "target.radius.rule", "target.radius.coefficient"}},
      {ExperimentKind::BoundCheck, {"function", "epsilon", "variant", "n0", "n_max"}},
      {ExperimentKind::ArcIdentity, {"samples", "seed"}},
      {ExperimentKind::Wolff, {"function", "eta", "samples", "seed"}},
  };
  return table;
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Orbit:
      return "orbit";
    case ExperimentKind::Rate:
      return "rate";
    case ExperimentKind::Summability:
      return "summability";
    case ExperimentKind::TheoremA:
      return "theorem-a";
    case ExperimentKind::Targets:
      return "targets";
    case ExperimentKind::PullbackCheck:
      return "pullback-check";
    case ExperimentKind::BoundCheck:
      return "bound-check";
    case ExperimentKind::ArcIdentity:
      return "arc-identity";
    case ExperimentKind::Wolff:
      return "wolff";
  }
  return "";
}

std::optional<ExperimentKind> parse_kind(std::string_view text) {
  for (const ExperimentKind k :
       {ExperimentKind::Orbit, ExperimentKind::Rate, ExperimentKind::Summability, ExperimentKind::TheoremA,
        ExperimentKind::Targets, ExperimentKind::PullbackCheck, ExperimentKind::BoundCheck, ExperimentKind::ArcIdentity,
        ExperimentKind::Wolff}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

BigReal parse_number(std::string_view text, Bits prec) {
  std::string body = trim(text);
  bool times_pi = false;
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
    times_pi = true;
    body = trim(body.substr(0, body.size() - 2));
    if (body.empty()) body = "1";
  }
  if (body.empty()) throw ConfigError("empty number");
  try {
    BigReal value(prec);
    if (const auto slash = body.find('/'); slash != std::string::npos) {
      const BigReal den = BigReal::parse(trim(body.substr(slash + 1)), prec);
      if (den.is_zero()) throw ConfigError("zero denominator in '" + std::string(text) + "'");
      value = BigReal::parse(trim(body.substr(0, slash)), prec) / den;
    } else {
      value = BigReal::parse(body, prec);
    }
    return times_pi ? value * BigReal::pi(prec) : value;
  } catch (const DomainError&) {
    throw ConfigError("malformed number '" + std::string(text) + "'");
  }
}

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  ExperimentConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (config.values_.count(key)) throw ConfigError("key '" + key + "' given twice");
    config.set(key, value);
  }
  config.validate();
  return config;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  const auto type = type_of(key);
  if (!type) throw ConfigError("unknown key '" + key + "'");
  check_value(key, value, *type);
  values_[key] = value;
}

void ExperimentConfig::validate() const {
  if (!has("schema")) throw ConfigError("missing key 'schema'");
  if (integer("schema") != 1) throw ConfigError("key 'schema': only schema 1 is supported");
  if (!has("kind")) throw ConfigError("missing key 'kind'");
  for (const std::string& key : required_keys().at(kind())) {
    if (!has(key)) throw ConfigError("missing key '" + key + "' for kind " + text("kind"));
  }
  try {
    policy().validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("policy: ") + e.what());
  }
}

std::string ExperimentConfig::serialize() const {
  std::string out = "schema = " + text("schema") + "\nkind = " + text("kind") + "\n";
  for (const auto& [key, value] : values_) {
    if (key == "schema" || key == "kind") continue;
    out += key + " = " + value + "\n";
  }
  return out;
}

ExperimentKind ExperimentConfig::kind() const { return *parse_kind(text("kind")); }

PrecisionPolicy ExperimentConfig::policy() const {
  PrecisionPolicy p;
  p.base_bits = integer_or("policy.base_bits", p.base_bits);
  p.max_bits = integer_or("policy.max_bits", p.max_bits);
  p.agreement_tol_bits = integer_or("policy.agreement_tol_bits", p.agreement_tol_bits);
  return p;
}

const std::string& ExperimentConfig::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing key '" + key + "'");
  return it->second;
}

std::string ExperimentConfig::text_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? text(key) : fallback;
}

long ExperimentConfig::integer(const std::string& key) const { return *parse_integral<long>(text(key)); }

long ExperimentConfig::integer_or(const std::string& key, long fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::uint64_t ExperimentConfig::unsigned_integer(const std::string& key) const {
  return *parse_integral<std::uint64_t>(text(key));
}

std::uint64_t ExperimentConfig::unsigned_or(const std::string& key, std::uint64_t fallback) const {
  return has(key) ? unsigned_integer(key) : fallback;
}

BigReal ExperimentConfig::decimal(const std::string& key) const { return parse_number(text(key), parse_bits()); }

BigReal ExperimentConfig::decimal_or(const std::string& key, std::string_view fallback) const {
  return parse_number(has(key) ? std::string_view(text(key)) : fallback, parse_bits());
}

std::optional<BigReal> ExperimentConfig::optional_decimal(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return decimal(key);
}

std::optional<CirclePoint> ExperimentConfig::optional_point(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return CirclePoint(decimal(key));
}

std::vector<BigReal> ExperimentConfig::decimal_list(const std::string& key) const {
  std::vector<BigReal> out;
  for (const std::string& item : split_list(text(key))) out.push_back(parse_number(item, parse_bits()));
  return out;
}

bool ExperimentConfig::flag_or(const std::string& key, bool fallback) const {
  return has(key) ? text(key) == "true" : fallback;
}

}  // namespace innerdyn::cli
