#include <CLI11.hpp>

#include <iostream>

#include "innerdyn/cli/runner.hpp"
#include "innerdyn/errors.hpp"

namespace {

struct Invocation {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
};

constexpr std::pair<const char*, const char*> kCommands[] = {
    {"orbit", "Interior or boundary orbit with distances to the Denjoy-Wolff point"},
    {"rate", "Two-sided rate constants for |f^n(0) - p|"},
    {"summability", "Geometric-tail test for the sum of 1 - |f^n(0)|"},
    {"theorem-a", "Monte Carlo annulus containment of boundary orbits"},
    {"targets", "Shrinking-target hit statistics"},
    {"pullback-check", "Shrinkage of pulled-back targets"},
    {"bound-check", "Pullback lengths against the explicit bound chains"},
    {"arc-identity", "Sine identity for pullback lengths against endpoint images"},
    {"wolff", "Contraction of Wolff regions under f"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace innerdyn::cli;
  CLI::App app{"innerdyn: boundary dynamics experiments for hyperbolic inner functions"};
  app.require_subcommand(1);
  Invocation inv;
  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", inv.config, "Experiment config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", inv.out, "Output directory (default: the config's out key)");
    sub->add_option("--seed", inv.seed, "Override the config seed");
    sub->add_option("--workers", inv.workers, "Worker threads, 0 = all cores")->capture_default_str();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  ExperimentConfig config;
  try {
    config = ExperimentConfig::load(inv.config);
    if (to_string(config.kind()) != command) {
      throw innerdyn::ConfigError("config kind '" + config.text("kind") + "' does not match subcommand " + command);
    }
    if (inv.seed) config.set("seed", std::to_string(*inv.seed));
  } catch (const innerdyn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::optional<std::filesystem::path> out;
  if (!inv.out.empty()) out = inv.out;
  if (!out && !config.has("out")) {
    std::cerr << "config error: no output directory; pass --out or set the out key\n";
    return kExitUsage;
  }
  return execute(config, RunOptions{inv.workers}, out, std::cerr);
}
