#pragma once

#include <cstddef>
#include <functional>

namespace clstrata {

/// Worker cap: CLSTRATA_THREADS if set, else hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n); chunked across workers, deterministic only in
/// that every index runs exactly once.  Callers own result ordering.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace clstrata
