// Timing harness: serial reference loops vs the OpenMP kernels, and the
// chirp-FFT transform vs plain quadrature. Informational; run with
// FRACTOMO_THREADS set to the core count to see the parallel speedups.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fractomo/exec.hpp"
#include "fractomo/oscillator.hpp"
#include "fractomo/test_signals.hpp"
#include "fractomo/tomography.hpp"
#include "fractomo/wigner.hpp"

namespace {

using namespace fractomo;
using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int repeats = 3) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = clock_type::now();
        fn();
        const auto t1 = clock_type::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-34s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n",
                name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    const UniformGrid grid = default_signal_grid();
    const SampledSignal gaussian = generate_test_signal(TestSignalKind::gaussian, grid);
    const SampledSignal chirp = generate_test_signal(TestSignalKind::chirp, grid);
    const FrftOrder half = reduce_order(0.5);
    const OscillatorConfig osc;

    std::printf("grid: %lld points, thread cap %d\n\n",
                static_cast<long long>(grid.count), thread_cap());

    report("frft kernel build (N=1024)",
           time_ms([&] { build_frft_kernel(half, grid, Exec::serial); }),
           time_ms([&] { build_frft_kernel(half, grid, Exec::parallel); }));

    const TransformKernel kernel = build_frft_kernel(half, grid);
    report("kernel apply (matvec)",
           time_ms([&] { apply_kernel(kernel, gaussian, Exec::serial); }),
           time_ms([&] { apply_kernel(kernel, gaussian, Exec::parallel); }));

    report("green kernel build (N=1024)",
           time_ms([&] {
               green_kernel(osc, PropagationTime{0.7}, grid, grid, Exec::serial);
           }),
           time_ms([&] {
               green_kernel(osc, PropagationTime{0.7}, grid, grid, Exec::parallel);
           }));

    const TomographyParams p{0.8, 0.9};
    const UniformGrid xg = suggest_x_grid(chirp, p, 2048);
    report("direct tomogram (2048 X points)",
           time_ms([&] { tomogram(chirp, p, xg, Exec::serial); }),
           time_ms([&] { tomogram(chirp, p, xg, Exec::parallel); }));

    const UniformGrid wgrid(-4.0, 1.0 / 32.0, 256);
    const SampledSignal wsig = generate_test_signal(TestSignalKind::two_gaussian, wgrid);
    const UniformGrid fgrid = default_freq_grid(wgrid);
    report("wigner map (256 x " + std::to_string(fgrid.count) + ")",
           time_ms([&] { wigner_map(wsig, fgrid, Exec::serial); }),
           time_ms([&] { wigner_map(wsig, fgrid, Exec::parallel); }));

    const UniformGrid recon_grid(-4.0, 1.0 / 16.0, 64);
    const UniformGrid mu_grid(-12.0, 0.2, 121);
    const UniformGrid rx_grid(-20.0, 0.1, 401);
    const SampledSignal rsig =
        generate_test_signal(TestSignalKind::gaussian, UniformGrid(-8.0, 1.0 / 16.0, 256));
    const TomogramProvider provider = make_frft_provider(rsig);
    report("reconstruct_correlation (N=64)",
           time_ms([&] {
               reconstruct_correlation(provider, recon_grid, mu_grid, rx_grid, Exec::serial);
           }, 1),
           time_ms([&] {
               reconstruct_correlation(provider, recon_grid, mu_grid, rx_grid,
                                       Exec::parallel);
           }, 1));

    std::printf("\n");
    const double slow_ms = time_ms([&] { apply_frft(chirp, reduce_order(1.0)); });
    const double fast_ms = time_ms([&] { apply_frft_fast(chirp, reduce_order(1.0)); });
    std::printf("frft a=1 N=1024: quadrature %.2f ms, chirp-fft %.3f ms (%.0fx)\n",
                slow_ms, fast_ms, slow_ms / fast_ms);
    return 0;
}
