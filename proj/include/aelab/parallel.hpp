#pragma once

#include <cstdint>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aelab {

/// Global worker cap. 0 = library default (all hardware threads).
void set_max_threads(int n);
int max_threads();

/// Parallel loop over [0, n). Each iteration must be independent and write
/// only to its own slots; under that contract results are identical for any
/// thread count. Exceptions from the body are captured and rethrown once.
template <class F>
void parallel_for(std::int64_t n, F&& body) {
#ifdef _OPENMP
    const int threads = max_threads();
    std::exception_ptr err = nullptr;
    std::mutex err_mu;
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
#else
    for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

/// Serial reference loop with the same signature; tests and the benchmark
/// drive kernels through both entry points and compare.
template <class F>
void serial_for(std::int64_t n, F&& body) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace aelab
