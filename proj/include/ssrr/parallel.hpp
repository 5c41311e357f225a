#pragma once

#include <cstddef>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssrr {

/// Number of workers used when a kernel is called with jobs <= 0.
inline int default_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Runs body(i) for i in [0, n) across jobs OpenMP threads.
///
/// Exceptions are caught per iteration; the one thrown by the lowest index is
/// rethrown after the loop, so failures are reported the same way as in a
/// serial loop regardless of scheduling.
template <class Body>
void parallel_for(std::size_t n, int jobs, Body&& body) {
    if (jobs <= 0) jobs = default_jobs();
    std::exception_ptr first_error;
    std::size_t first_index = std::numeric_limits<std::size_t>::max();
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(ssrr_parallel_for_error)
            {
                if (static_cast<std::size_t>(i) < first_index) {
                    first_index = static_cast<std::size_t>(i);
                    first_error = std::current_exception();
                }
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ssrr
