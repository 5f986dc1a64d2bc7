#ifndef RRT_PARALLEL_HPP
#define RRT_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rrt {

/// Runs body(i) for i in [0, count).  workers <= 1 is a plain loop; otherwise
/// iterations are spread over an OpenMP team.  Bodies must write only to
/// per-index slots so the outcome is independent of the schedule.  The first
/// exception thrown by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::uint64_t count, unsigned workers, Body&& body) {
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4) num_threads(static_cast<int>(workers))
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::uint64_t>(i));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace rrt

#endif  // RRT_PARALLEL_HPP
