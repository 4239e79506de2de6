#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fgsat {

// Run fn(i) for i in [0, n). Each index writes only its own output slot,
// so results are bitwise identical regardless of thread count.
template <typename Fn>
void parallel_for(size_t n, bool parallel, Fn&& fn) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < (long long)n; ++i) fn(size_t(i));
        return;
    }
#else
    (void)parallel;
#endif
    for (size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace fgsat
