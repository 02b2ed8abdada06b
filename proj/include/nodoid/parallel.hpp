#pragma once

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nodoid {

/// Number of worker threads for parallel kernels: the OpenMP default, capped
/// by the NODOID_THREADS environment variable when it holds a positive integer.
int thread_limit();

/// Maximum threads available to OpenMP in this build (1 without OpenMP).
inline int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace nodoid
