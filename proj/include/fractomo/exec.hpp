#pragma once

#include <cstdint>

namespace fractomo {

// Execution policy for the data-parallel kernels. Every kernel has a plain
// serial loop and an OpenMP loop over independent output elements; both
// compute each element with the same per-element code, so results are
// bitwise identical across policies and thread counts.
enum class Exec {
    serial,
    parallel,
    auto_policy,  // parallel when OpenMP is active and the thread cap allows
};

// Thread cap: FRACTOMO_THREADS caps OpenMP parallelism (0 or 1 forces the
// serial path). Read once at first use; set_thread_cap overrides it.
int thread_cap();
void set_thread_cap(int n);

// Resolves auto_policy against the build (OpenMP on/off) and thread cap.
Exec resolve(Exec exec);

namespace detail {

void run_indexed(std::int64_t count, void* ctx, void (*body)(void*, std::int64_t),
                 Exec exec);

}  // namespace detail

// parallel_for(n, body): body(i) for i in [0, n), each index exactly once.
// Bodies must not share mutable state across indices.
template <typename Body>
void parallel_for(std::int64_t count, const Body& body, Exec exec = Exec::auto_policy) {
    auto trampoline = [](void* ctx, std::int64_t i) {
        (*static_cast<const Body*>(ctx))(i);
    };
    detail::run_indexed(count, const_cast<Body*>(&body), trampoline, exec);
}

}  // namespace fractomo
