#pragma once

#include <cstddef>
#include <functional>

namespace quadmap {

/// QUADMAP_THREADS if set and positive, else hardware concurrency.
int default_worker_count();

/// Runs fn(i) for i in [0, n) on `workers` threads (contiguous blocks).
/// Callers write results by index, so output is worker-count independent.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace quadmap
