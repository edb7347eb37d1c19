#include "xy/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace xy {

int thread_count() {
    if (const char* env = std::getenv("XYCHAIN_THREADS")) {
        const int k = std::atoi(env);
        if (k >= 1) return k;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    const std::int64_t k = std::min<std::int64_t>(thread_count(), n);
    if (k == 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::int64_t block = (n + k - 1) / k;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(k));
    for (std::int64_t t = 0; t < k; ++t) {
        const std::int64_t lo = t * block;
        const std::int64_t hi = std::min(lo + block, n);
        if (lo >= hi) break;
        workers.emplace_back([lo, hi, &fn] {
            for (std::int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& w : workers) w.join();
}

}  // namespace xy
