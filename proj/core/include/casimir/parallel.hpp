#pragma once

#include <cstddef>
#include <functional>

namespace casimir {

/// Thread count: CASIMIR_THREADS when set (>= 1), otherwise hardware cores.
unsigned thread_count();

/// Runs fn(i) for i in [0, n) across thread_count() workers. Work items must
/// be independent; results should go into caller-owned slots indexed by i so
/// the outcome is identical at any parallelism. Exceptions are captured and
/// the first one rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace casimir
