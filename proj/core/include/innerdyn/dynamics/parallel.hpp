#pragma once

#include <cstddef>
#include <functional>

namespace innerdyn::dynamics {

/// Calls body(i) for i in [0, count) on `workers` threads (0 = hardware
/// concurrency). Indices are claimed dynamically; results must be written to
/// per-index slots so the outcome does not depend on scheduling. The first
/// exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace innerdyn::dynamics
