#include "qalg/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qalg {

namespace {
bool g_parallel = true;
}

void set_parallel(bool on)
{
    g_parallel = on;
}

bool parallel_enabled()
{
#ifdef _OPENMP
    return g_parallel;
#else
    return false;
#endif
}

int hardware_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qalg
