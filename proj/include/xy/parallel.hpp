// Helpers for deterministic data-parallel loops. The worker count comes from
// the XYCHAIN_THREADS environment variable when set, else from the hardware.
#pragma once

#include <cstdint>
#include <functional>

namespace xy {

int thread_count();

// Runs fn(i) for every i in [0, n) split into contiguous blocks. Callers that
// write results by index get identical output for any thread count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace xy
