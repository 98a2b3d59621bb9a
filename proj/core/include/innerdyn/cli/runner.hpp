#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "innerdyn/cli/report.hpp"

namespace innerdyn::cli {

inline constexpr int kExitHealthy = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnhealthy = 2;

struct RunOptions {
  /// Worker threads for sampled experiments; 0 = hardware concurrency. Not part of the report.
  unsigned workers = 1;
};

/// Dispatches on config.kind(). Precondition failures throw (ConfigError,
/// DomainError, WindowTooShort); unhealthy runs return with healthy = false.
ExperimentReport run(const ExperimentConfig& config, const RunOptions& options = {});

/// run + write_report into `out` (config key "out" when absent), reporting
/// problems on `log`. Returns the process exit code.
int execute(const ExperimentConfig& config, const RunOptions& options, std::optional<std::filesystem::path> out,
            std::ostream& log);

}  // namespace innerdyn::cli
