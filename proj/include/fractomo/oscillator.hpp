#pragma once

#include "fractomo/exec.hpp"
#include "fractomo/frft.hpp"
#include "fractomo/signal.hpp"

namespace fractomo {

struct OscillatorConfig {
    double mass = 1.0;
    double omega = 1.0;
    double hbar = 1.0;

    OscillatorConfig() = default;
    OscillatorConfig(double mass_, double omega_, double hbar_);
};

struct PropagationTime {
    double t = 0.0;

    double phase(const OscillatorConfig& cfg) const { return cfg.omega * t; }
};

// Harmonic-oscillator propagator kernel
//   G(x, y, t) = sqrt(m w / (2 pi i hbar sin wt))
//                * exp((i m w / 2 hbar) [(x^2 + y^2) cot wt - 2 x y / sin wt]),
// principal branch for the complex square root. Requires |sin wt| >= 1e-6.
TransformKernel green_kernel(const OscillatorConfig& cfg, const PropagationTime& time,
                             const UniformGrid& x_grid, const UniformGrid& y_grid,
                             Exec exec = Exec::auto_policy);

// psi(x, t) = integral G(x, y, t) psi0(y) dy by grid quadrature. t = 0 is the
// identity; times with |sin wt| < 1e-6 are composed from two non-degenerate
// steps through the quarter period.
SampledSignal propagate(const OscillatorConfig& cfg, const SampledSignal& psi0,
                        const PropagationTime& time, Exec exec = Exec::auto_policy);

// The propagator expressed as a fractional Fourier kernel: evaluates G on the
// mapped lattice x = sqrt(2 pi hbar / m w) u at t = pi a / (2 w) and applies
// the phase exp(i phi / 2) and the dy/du' Jacobian, so the result equals
// build_frft_kernel(order, grid) entrywise.
TransformKernel frft_kernel_from_green(const OscillatorConfig& cfg, const FrftOrder& order,
                                       const UniformGrid& grid, Exec exec = Exec::auto_policy);

// Max-abs of i hbar dPsi/dt + (hbar^2/2m) d2Psi/dx2 - (m w^2 x^2 / 2) Psi over
// interior grid points, derivatives by symmetric differences (dt in time, the
// grid step in x). An end-to-end probe of the propagator; ~2nd order in the
// discretization.
double schrodinger_residual(const OscillatorConfig& cfg, const SampledSignal& psi0,
                            const PropagationTime& time, double dt,
                            Exec exec = Exec::auto_policy);

}  // namespace fractomo
