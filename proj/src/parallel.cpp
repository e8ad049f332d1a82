#include "arakzeta/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arakzeta {

namespace {

int env_cap() {
    const char* v = std::getenv("ARAKZETA_THREADS");
    if (!v || !*v) return 0;
    try {
        const int n = std::stoi(v);
        return n > 0 ? n : 0;
    } catch (...) {
        return 0;
    }
}

}  // namespace

int thread_count() {
#ifdef _OPENMP
    static const int n = [] {
        const int cap = env_cap();
        const int hw = omp_get_max_threads();
        return cap > 0 && cap < hw ? cap : hw;
    }();
    return n;
#else
    return 1;
#endif
}

void apply_thread_cap() {
#ifdef _OPENMP
    omp_set_num_threads(thread_count());
#endif
}

}  // namespace arakzeta
