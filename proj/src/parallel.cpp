#include "dynkin/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dynkin::par {

namespace {
Kernel g_kernel = openmp_available() ? Kernel::OpenMP : Kernel::Serial;
}

Kernel kernel() { return g_kernel; }

void set_kernel(Kernel k) { g_kernel = openmp_available() ? k : Kernel::Serial; }

int jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_jobs(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

bool openmp_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace dynkin::par
