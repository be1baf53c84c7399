#include "fractomo/exec.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fractomo {

namespace {

int initial_cap() {
    if (const char* env = std::getenv("FRACTOMO_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 0) return n;
        } catch (...) {
            // malformed value: ignore, fall through to the default
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::atomic<int>& cap_storage() {
    static std::atomic<int> cap{initial_cap()};
    return cap;
}

}  // namespace

int thread_cap() { return cap_storage().load(); }

void set_thread_cap(int n) { cap_storage().store(n < 0 ? 0 : n); }

Exec resolve(Exec exec) {
    if (exec != Exec::auto_policy) return exec;
#ifdef _OPENMP
    return thread_cap() > 1 ? Exec::parallel : Exec::serial;
#else
    return Exec::serial;
#endif
}

namespace detail {

void run_indexed(std::int64_t count, void* ctx, void (*body)(void*, std::int64_t),
                 Exec exec) {
    if (count <= 0) return;
    if (resolve(exec) == Exec::parallel) {
#ifdef _OPENMP
        const int threads = std::max(1, thread_cap());
#pragma omp parallel for schedule(static) num_threads(threads)
        for (std::int64_t i = 0; i < count; ++i) {
            body(ctx, i);
        }
        return;
#endif
    }
    for (std::int64_t i = 0; i < count; ++i) {
        body(ctx, i);
    }
}

}  // namespace detail

}  // namespace fractomo
