#pragma once

#include <functional>
#include <iosfwd>

#include "fractomo/exec.hpp"
#include "fractomo/frft.hpp"
#include "fractomo/signal.hpp"

namespace fractomo {

// Line parameters of the tomographic variable X = mu*u + nu*omega.
struct TomographyParams {
    double mu = 0.0;
    double nu = 1.0;

    double radius() const;  // sqrt(mu^2 + nu^2)
    double angle() const;   // atan2(nu, mu)
};

// Real nonnegative samples of w(X, mu, nu) on an X grid.
struct Tomogram {
    TomographyParams params;
    UniformGrid x_grid;
    std::vector<double> values;

    // sum values * step
    double total_mass() const;
};

struct CorrelationMatrix {
    UniformGrid grid;
    std::vector<cplx> entries;  // row-major, count x count

    cplx at(std::int64_t i, std::int64_t j) const {
        return entries[static_cast<std::size_t>(i * grid.count + j)];
    }
};

// Direct quadrature of
//   w(X, mu, nu) = 1/(2 pi |nu|) | integral q(u) exp(i mu u^2 / 2 nu - i X u / nu) du |^2.
// Requires |nu| >= 1e-6; smaller nu is served by tomogram_via_frft.
Tomogram tomogram(const SampledSignal& s, const TomographyParams& p,
                  const UniformGrid& x_grid, Exec exec = Exec::auto_policy);

// Same distribution through the fractional transform: with
// (mu, nu) = r (cos phi, sin phi),
//   w(X, mu, nu) = (1/r) |(F^{2 phi/pi} q~)(X / (sqrt(2 pi) r))|^2,
// where q~(z) = q(sqrt(2 pi) z) is the dilated signal (a grid relabel).
// Defined for every (mu, nu) != (0, 0) including nu = 0, where it reduces to
// the position density w(X, mu, 0) = |q(X/mu)|^2 / |mu|.
Tomogram tomogram_via_frft(const SampledSignal& s, const TomographyParams& p,
                           const UniformGrid& x_grid);

// X grid on which the bridge needs no interpolation: X_i = r * u_i.
UniformGrid natural_x_grid(const SampledSignal& s, const TomographyParams& p);

// X window that captures the mass of w for this signal and parameters,
// sized from the grid span and the measured signal bandwidth.
UniformGrid suggest_x_grid(const SampledSignal& s, const TomographyParams& p,
                           std::int64_t count = 2048);

// One-sided angular-frequency support estimate: smallest W such that the
// spectral mass outside [-W, W] is below tail_mass.
double signal_bandwidth(const SampledSignal& s, double tail_mass = 1e-8);

using TomogramProvider =
    std::function<Tomogram(const UniformGrid& x_grid, double mu, double nu)>;

TomogramProvider make_direct_provider(const SampledSignal& s, Exec exec = Exec::auto_policy);
TomogramProvider make_frft_provider(const SampledSignal& s);

// Defaults for the reconstruction quadrature windows; both axes are
// config-exposed because converged-but-smaller windows run much faster.
UniformGrid default_mu_grid();  // [-40, 40], step 0.05
UniformGrid default_recon_x_grid();

// Inversion of the tomographic map:
//   q(u) q*(u') = (1/2 pi) integral w(X, mu, u - u') exp(i(X - mu (u+u')/2)) dX dmu,
// double quadrature over x_grid and mu_grid for every grid pair. The provider
// is called once per (mu, nu = u - u'). Logs a truncation warning when the
// mu integrand has not decayed below 1e-3 of its peak at the window edges.
CorrelationMatrix reconstruct_correlation(const TomogramProvider& provider,
                                          const UniformGrid& grid,
                                          const UniformGrid& mu_grid,
                                          const UniformGrid& x_grid,
                                          Exec exec = Exec::auto_policy);

// Rank-1 readout of q q*: picks the strongest diagonal entry j* and returns
// q_rec(u_i) = entries[i][j*] / sqrt(entries[j*][j*]), so q_rec(u_{j*}) is
// real positive (the global phase is unobservable in tomograms). Logs the
// measured second-to-first singular value ratio when it exceeds 0.1.
SampledSignal reconstruct_signal(const CorrelationMatrix& corr);

// |<a, b>| / (||a|| ||b||)
double fidelity(const SampledSignal& a, const SampledSignal& b);

void dump_correlation(const CorrelationMatrix& corr, std::ostream& out);

}  // namespace fractomo
