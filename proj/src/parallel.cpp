#include "hopfrob/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>

#include <omp.h>

namespace hopfrob {

int thread_count() {
    static const int n = [] {
        if (const char* env = std::getenv("HOPFROB_THREADS")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return omp_get_max_threads();
    }();
    return n;
}

void parallel_for(int n, const std::function<void(int)>& body, Exec exec) {
    if (exec == Exec::Serial || thread_count() == 1 || n < 2) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    // Exceptions cannot cross the OpenMP region; the lowest failing index is rethrown.
    std::exception_ptr err;
    int err_index = n;
    std::mutex mu;
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (i < err_index) {
                err_index = i;
                err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace hopfrob
