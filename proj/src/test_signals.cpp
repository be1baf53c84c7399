#include "fractomo/test_signals.hpp"

#include <cmath>
#include <numbers>

#include "fractomo/errors.hpp"

namespace fractomo {

namespace {

constexpr double kPi = std::numbers::pi;

double gauss(double u) { return std::pow(2.0, 0.25) * std::exp(-kPi * u * u); }

}  // namespace

TestSignalKind parse_signal_kind(const std::string& name) {
    if (name == "gaussian") return TestSignalKind::gaussian;
    if (name == "shifted-gaussian") return TestSignalKind::shifted_gaussian;
    if (name == "two-gaussian") return TestSignalKind::two_gaussian;
    if (name == "chirp") return TestSignalKind::chirp;
    throw ParseError("unknown signal kind '" + name +
                     "' (expected gaussian | shifted-gaussian | two-gaussian | chirp)");
}

SampledSignal generate_test_signal(TestSignalKind kind, const UniformGrid& grid) {
    std::vector<cplx> values(static_cast<std::size_t>(grid.count));
    switch (kind) {
        case TestSignalKind::gaussian:
            for (std::int64_t i = 0; i < grid.count; ++i) {
                values[static_cast<std::size_t>(i)] = gauss(grid.point(i));
            }
            break;
        case TestSignalKind::shifted_gaussian:
            for (std::int64_t i = 0; i < grid.count; ++i) {
                values[static_cast<std::size_t>(i)] = gauss(grid.point(i) - 1.0);
            }
            break;
        case TestSignalKind::two_gaussian:
            for (std::int64_t i = 0; i < grid.count; ++i) {
                const double u = grid.point(i);
                values[static_cast<std::size_t>(i)] = gauss(u - 1.5) + gauss(u + 1.5);
            }
            break;
        case TestSignalKind::chirp:
            for (std::int64_t i = 0; i < grid.count; ++i) {
                const double u = grid.point(i);
                values[static_cast<std::size_t>(i)] =
                    gauss(u) * std::polar(1.0, kPi * u * u);
            }
            break;
    }
    SampledSignal signal(grid, std::move(values));
    if (kind == TestSignalKind::two_gaussian) {
        // the two humps overlap, so the sum is renormalized explicitly
        const double norm = l2_norm(signal);
        return scaled(signal, 1.0 / norm);
    }
    return signal;
}

}  // namespace fractomo
