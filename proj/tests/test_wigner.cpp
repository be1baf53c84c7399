#include <cmath>
#include <sstream>

#include "doctest.h"
#include "fractomo/test_signals.hpp"
#include "fractomo/wigner.hpp"
#include "oracles.hpp"

using namespace fractomo;

namespace {

const UniformGrid kGrid(-4.0, 1.0 / 32.0, 256);

}  // namespace

TEST_CASE("wigner map of the Gaussian: analytic form and positivity") {
    const SampledSignal g = generate_test_signal(TestSignalKind::gaussian, kGrid);
    const WignerMap wm = wigner_map(g, default_freq_grid(kGrid));

    // W(u, w) = (1/pi) exp(-2 pi u^2) exp(-w^2 / 2 pi), the unique
    // nonnegative case
    double worst = 0.0;
    double lowest = 0.0;
    for (std::int64_t i = 0; i < wm.u_grid.count; ++i) {
        for (std::int64_t k = 0; k < wm.freq_grid.count; ++k) {
            const double u = wm.u_grid.point(i);
            const double w = wm.freq_grid.point(k);
            const double expected = std::exp(-2.0 * oracles::kPi * u * u) *
                                    std::exp(-w * w / (2.0 * oracles::kPi)) /
                                    oracles::kPi;
            worst = std::max(worst, std::abs(wm.at(i, k) - expected));
            lowest = std::min(lowest, wm.at(i, k));
        }
    }
    CHECK(worst <= 1e-8);
    CHECK(lowest >= -1e-10);
}

TEST_CASE("time marginal reproduces |q(u)|^2") {
    const SampledSignal s = generate_test_signal(TestSignalKind::two_gaussian, kGrid);
    const WignerMap wm = wigner_map(s, default_freq_grid(kGrid));
    for (std::int64_t i = 0; i < kGrid.count; ++i) {
        double mass = 0.0;
        for (std::int64_t k = 0; k < wm.freq_grid.count; ++k) mass += wm.at(i, k);
        mass *= wm.freq_grid.step;
        CHECK(std::abs(mass - std::norm(s.values[static_cast<std::size_t>(i)])) <= 1e-3);
    }
}

TEST_CASE("total mass is the squared norm") {
    const SampledSignal s = generate_test_signal(TestSignalKind::chirp, kGrid);
    const WignerMap wm = wigner_map(s, default_freq_grid(kGrid));
    double mass = 0.0;
    for (const double v : wm.values) mass += v;
    mass *= wm.u_grid.step * wm.freq_grid.step;
    const double n = l2_norm(s);
    CHECK(std::abs(mass - n * n) <= 1e-4);
}

TEST_CASE("map is invariant under a global phase") {
    const SampledSignal s = generate_test_signal(TestSignalKind::two_gaussian, kGrid);
    const WignerMap base = wigner_map(s, default_freq_grid(kGrid));
    const WignerMap rotated =
        wigner_map(scaled(s, std::polar(1.0, 2.1)), default_freq_grid(kGrid));
    CHECK(oracles::max_abs_diff(base.values, rotated.values) <= 1e-12);
}

TEST_CASE("radon slices reproduce the tomograms") {
    const SampledSignal s = generate_test_signal(TestSignalKind::two_gaussian, kGrid);
    const WignerMap wm = wigner_map(s, default_freq_grid(kGrid));

    SUBCASE("(1, 0): the time marginal / position density") {
        const UniformGrid xg = symmetric_grid(4.0, 256);
        const Tomogram slice = radon_slice(wm, TomographyParams{1.0, 0.0}, xg);
        const Tomogram reference = tomogram_via_frft(s, TomographyParams{1.0, 0.0}, xg);
        CHECK(oracles::max_abs_diff(slice.values, reference.values) <= 5e-3);
    }

    SUBCASE("(0, 1): the frequency marginal") {
        // X on the map's frequency lattice, so the slice is interpolation-free
        const UniformGrid& fg = wm.freq_grid;
        const std::int64_t k0 = fg.count / 2 - 128;
        const UniformGrid xg(fg.point(k0), fg.step, 256);
        const Tomogram slice = radon_slice(wm, TomographyParams{0.0, 1.0}, xg);
        const Tomogram reference = tomogram(s, TomographyParams{0.0, 1.0}, xg);
        CHECK(oracles::max_abs_diff(slice.values, reference.values) <= 2e-3);
    }

    SUBCASE("rotated (1, 1)/sqrt(2)") {
        const double c = 1.0 / std::sqrt(2.0);
        const UniformGrid xg = symmetric_grid(10.0, 256);
        const Tomogram slice = radon_slice(wm, TomographyParams{c, c}, xg);
        const Tomogram reference = tomogram(s, TomographyParams{c, c}, xg);
        CHECK(oracles::max_abs_diff(slice.values, reference.values) <= 5e-3);
    }
}

TEST_CASE("pgm and csv dumps are well formed") {
    const SampledSignal s = generate_test_signal(
        TestSignalKind::gaussian, UniformGrid(-2.0, 1.0 / 8.0, 32));
    const WignerMap wm = wigner_map(s, default_freq_grid(s.grid));

    std::stringstream pgm;
    write_pgm(wm, pgm);
    std::string magic;
    std::int64_t width = 0, height = 0, levels = 0;
    pgm >> magic >> width >> height >> levels;
    CHECK(magic == "P2");
    CHECK(width == wm.freq_grid.count);
    CHECK(height == wm.u_grid.count);
    CHECK(levels == 255);
    std::int64_t count = 0;
    int value = 0;
    while (pgm >> value) {
        ++count;
        CHECK(value >= 0);
        CHECK(value <= 255);
    }
    CHECK(count == width * height);

    std::stringstream csv;
    write_wigner_grid(wm, csv);
    std::string line;
    std::int64_t rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 2);
    }
    CHECK(rows == width * height);
}
