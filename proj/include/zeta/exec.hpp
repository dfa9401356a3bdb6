#pragma once

#include <cstddef>
#include <functional>

namespace zeta::exec {

// Worker count resolution: explicit argument > ZETA_WORKERS env var > number
// of hardware threads.  Always >= 1.
int default_workers();
int resolve_workers(int requested);  // requested <= 0 means "use default"

// Runs fn(0..count-1), each index exactly once.  workers > 1 fans out with
// OpenMP when available; results must be written to caller-owned slots so the
// outcome is identical to the serial order regardless of scheduling.
void run_indexed(std::size_t count, int workers,
                 const std::function<void(std::size_t)>& fn);

}  // namespace zeta::exec
