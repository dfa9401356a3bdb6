#include "zeta/exec.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#ifdef ZETA_HAVE_OPENMP
#include <omp.h>
#endif

namespace zeta::exec {

int default_workers() {
    if (const char* env = std::getenv("ZETA_WORKERS")) {
        try {
            int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int resolve_workers(int requested) {
    return requested >= 1 ? requested : default_workers();
}

void run_indexed(std::size_t count, int workers,
                 const std::function<void(std::size_t)>& fn) {
    workers = resolve_workers(workers);
#ifdef ZETA_HAVE_OPENMP
    if (workers > 1 && count > 1) {
        #pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace zeta::exec
