#pragma once

#include <string>

#include "innerdyn/cli/config.hpp"
#include "innerdyn/inner/inner_function.hpp"

namespace innerdyn::cli {

/// The function declared under `prefix` ("function", "function.outer", ...).
///
///   automorphism     a
///   blaschke         zeros = re:im, re:im ...; rotation (angle, default 0)
///   atomic_singular  mass; singularity (angle, default 0)
///   rational2        lambda
///   linear_plus_tan  lambda
///   composition      <prefix>.outer.*, <prefix>.inner.*
///
/// Throws ConfigError for missing parameters or ones the variant does not take.
inner::InnerFunction build_function(const ExperimentConfig& config, const std::string& prefix = "function");

}  // namespace innerdyn::cli
