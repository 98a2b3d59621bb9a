#include "innerdyn/cli/function_builder.hpp"

#include <set>
#include <sstream>

#include "innerdyn/errors.hpp"

namespace innerdyn::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

}  // namespace

inner::InnerFunction build_function(const ExperimentConfig& config, const std::string& prefix) {
  const std::string variant = config.text(prefix);
  const Bits prec = config.parse_bits();
  const std::map<std::string, std::set<std::string>> allowed{
      {"automorphism", {"a"}},           {"blaschke", {"zeros", "rotation"}},
      {"atomic_singular", {"mass", "singularity"}}, {"rational2", {"lambda"}},
      {"linear_plus_tan", {"lambda"}},   {"composition", {}},
  };
  const std::set<std::string>& params = allowed.at(variant);
  for (const auto& [key, value] : config.values()) {
    if (key.rfind(prefix + ".", 0) != 0) continue;
    const std::string rest = key.substr(prefix.size() + 1);
    if (rest.rfind("outer", 0) == 0 || rest.rfind("inner", 0) == 0) {
      if (variant != "composition") throw ConfigError("key '" + key + "': only composition has outer/inner parts");
      continue;
    }
    if (!params.count(rest)) throw ConfigError("key '" + key + "': not a parameter of " + variant);
  }
  const auto param = [&](const std::string& name) { return config.decimal(prefix + "." + name); };
  const auto angle = [&](const std::string& name) {
    return CirclePoint(config.decimal_or(prefix + "." + name, "0"));
  };

  try {
    if (variant == "automorphism") return inner::InnerFunction::automorphism(param("a"));
    if (variant == "rational2") return inner::InnerFunction::rational2(param("lambda"));
    if (variant == "linear_plus_tan") return inner::InnerFunction::linear_plus_tan(param("lambda"));
    if (variant == "atomic_singular") return inner::InnerFunction::atomic_singular(param("mass"), angle("singularity"));
    if (variant == "blaschke") {
      std::vector<num::BigComplex> zeros;
      std::stringstream ss(config.text(prefix + ".zeros"));
      std::string item;
      while (std::getline(ss, item, ',')) {
        const std::string pair = trim(item);
        const auto colon = pair.find(':');
        zeros.emplace_back(parse_number(pair.substr(0, colon), prec), parse_number(pair.substr(colon + 1), prec));
      }
      return inner::InnerFunction::blaschke(std::move(zeros), angle("rotation"));
    }
    return inner::InnerFunction::compose(build_function(config, prefix + ".outer"),
                                         build_function(config, prefix + ".inner"));
  } catch (const DomainError& e) {
    throw ConfigError("key '" + prefix + "': " + e.what());
  }
}

}  // namespace innerdyn::cli
