#pragma once

#include <cstddef>
#include <functional>

namespace wk {

// Runs fn(0..count-1), spread over `jobs` worker threads (serial when
// jobs <= 1). Callers own determinism: write results into per-index slots
// and merge after the join.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

// Progress sink for long sweeps: called with (done, total) after each unit.
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

struct SweepOptions {
  int jobs = 1;
  ProgressFn progress;
};

}  // namespace wk
