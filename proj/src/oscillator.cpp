#include "fractomo/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fractomo/errors.hpp"

namespace fractomo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateSin = 1e-6;

}  // namespace

OscillatorConfig::OscillatorConfig(double mass_, double omega_, double hbar_)
    : mass(mass_), omega(omega_), hbar(hbar_) {
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0) || !std::isfinite(mass) ||
        !std::isfinite(omega) || !std::isfinite(hbar)) {
        throw DomainError("oscillator: mass, omega, hbar must be positive and finite");
    }
}

TransformKernel green_kernel(const OscillatorConfig& cfg, const PropagationTime& time,
                             const UniformGrid& x_grid, const UniformGrid& y_grid,
                             Exec exec) {
    const double wt = time.phase(cfg);
    const double sin_wt = std::sin(wt);
    if (std::abs(sin_wt) < kDegenerateSin) {
        throw DomainError("green_kernel: sin(omega t) ~ 0 at omega t = " +
                          std::to_string(wt) +
                          "; the kernel degenerates to a delta (propagate composes "
                          "through the quarter period instead)");
    }
    const double cot_wt = std::cos(wt) / sin_wt;
    const double m_w_over_2h = cfg.mass * cfg.omega / (2.0 * cfg.hbar);
    // principal branch of sqrt(m w / (2 pi i hbar sin wt)); the argument is
    // purely imaginary, -i r for sin wt > 0 and +i |r| for sin wt < 0
    const cplx prefactor = std::sqrt(
        cplx(0.0, -cfg.mass * cfg.omega / (2.0 * kPi * cfg.hbar * sin_wt)));

    TransformKernel kernel;
    kernel.row_grid = x_grid;
    kernel.col_grid = y_grid;
    kernel.quadrature_weight = y_grid.step;
    kernel.entries.resize(static_cast<std::size_t>(x_grid.count) *
                          static_cast<std::size_t>(y_grid.count));

    const std::int64_t cols = y_grid.count;
    cplx* entries = kernel.entries.data();
    parallel_for(
        x_grid.count,
        [&](std::int64_t i) {
            const double x = x_grid.point(i);
            cplx* row = entries + i * cols;
            for (std::int64_t j = 0; j < cols; ++j) {
                const double y = y_grid.point(j);
                const double phase =
                    m_w_over_2h * ((x * x + y * y) * cot_wt - 2.0 * x * y / sin_wt);
                row[j] = prefactor * std::polar(1.0, phase);
            }
        },
        exec);
    return kernel;
}

SampledSignal propagate(const OscillatorConfig& cfg, const SampledSignal& psi0,
                        const PropagationTime& time, Exec exec) {
    validate_finite(psi0);
    if (time.t == 0.0) {
        return psi0;  // G(x, y, 0) = delta(x - y)
    }
    const double wt = time.phase(cfg);
    if (std::abs(std::sin(wt)) < kDegenerateSin) {
        // Delta-like kernel (omega t near a multiple of pi). Step through the
        // quarter period: both sub-steps then sit at |sin| ~ |cos(wt)| ~ 1.
        const double quarter = kPi / (2.0 * cfg.omega);
        const SampledSignal mid = propagate(cfg, psi0, PropagationTime{quarter}, exec);
        return propagate(cfg, mid, PropagationTime{time.t - quarter}, exec);
    }
    return apply_kernel(green_kernel(cfg, time, psi0.grid, psi0.grid, exec), psi0, exec);
}

TransformKernel frft_kernel_from_green(const OscillatorConfig& cfg, const FrftOrder& order,
                                       const UniformGrid& grid, Exec exec) {
    if (order.degenerate()) {
        throw DomainError("frft_kernel_from_green: degenerate order a = " +
                          std::to_string(order.a));
    }
    // u <-> x dictionary: x = sqrt(2 pi hbar / m w) u, t = pi a / (2 w).
    const double scale = std::sqrt(2.0 * kPi * cfg.hbar / (cfg.mass * cfg.omega));
    const UniformGrid x_grid = grid.scaled(scale);
    const PropagationTime t{order.phi / cfg.omega};

    TransformKernel kernel = green_kernel(cfg, t, x_grid, x_grid, exec);
    // phase exp(i phi / 2) plus the dy/du' Jacobian of the variable change
    const cplx factor = std::polar(scale, order.phi / 2.0);
    for (auto& entry : kernel.entries) {
        entry *= factor;
    }
    kernel.row_grid = grid;
    kernel.col_grid = grid;
    kernel.quadrature_weight = grid.step;
    return kernel;
}

double schrodinger_residual(const OscillatorConfig& cfg, const SampledSignal& psi0,
                            const PropagationTime& time, double dt, Exec exec) {
    validate_finite(psi0);
    if (!(dt > 0.0)) {
        throw DomainError("schrodinger_residual: dt must be > 0");
    }
    const SampledSignal at_t = propagate(cfg, psi0, time, exec);
    const SampledSignal ahead = propagate(cfg, psi0, PropagationTime{time.t + dt}, exec);
    const SampledSignal behind = propagate(cfg, psi0, PropagationTime{time.t - dt}, exec);

    const UniformGrid& g = psi0.grid;
    const double dx = g.step;
    const double inv_dx2 = 1.0 / (dx * dx);
    const cplx i_hbar(0.0, cfg.hbar);
    const double half_hbar2_over_m = cfg.hbar * cfg.hbar / (2.0 * cfg.mass);
    const double half_m_w2 = 0.5 * cfg.mass * cfg.omega * cfg.omega;

    double max_abs = 0.0;
    for (std::int64_t i = 1; i + 1 < g.count; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const cplx dpsi_dt = (ahead.values[k] - behind.values[k]) / (2.0 * dt);
        const cplx lap =
            (at_t.values[k + 1] - 2.0 * at_t.values[k] + at_t.values[k - 1]) * inv_dx2;
        const double x = g.point(i);
        const cplx residual =
            i_hbar * dpsi_dt + half_hbar2_over_m * lap - half_m_w2 * x * x * at_t.values[k];
        max_abs = std::max(max_abs, std::abs(residual));
    }
    return max_abs;
}

}  // namespace fractomo
