#include "fracwalk/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fracwalk {

void set_threads(int requested) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("FRACWALK_THREADS")) {
            try {
                n = std::stoi(env);
            } catch (...) {
                n = 0;
            }
        }
    }
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace fracwalk
