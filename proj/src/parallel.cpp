#include "gaussmf/parallel.hpp"

#include <omp.h>

namespace gmf {

void set_workers(int n)
{
    if (n > 0) {
        omp_set_num_threads(n);
    }
}

int workers() { return omp_get_max_threads(); }

} // namespace gmf
