#pragma once

#include <iosfwd>

#include "fractomo/exec.hpp"
#include "fractomo/signal.hpp"
#include "fractomo/tomography.hpp"

namespace fractomo {

// Real joint time-frequency quasidistribution
//   W(u, w) = (1/2 pi) integral q(u + tau/2) q*(u - tau/2) exp(-i w tau) dtau
// (angular frequency, matching the exp(-i X u / nu) phase of the tomograms).
struct WignerMap {
    UniformGrid u_grid;
    UniformGrid freq_grid;
    std::vector<double> values;  // row-major, u index major

    double at(std::int64_t iu, std::int64_t iw) const {
        return values[static_cast<std::size_t>(iu * freq_grid.count + iw)];
    }
};

// Frequency grid covering one full period pi/step of the discrete tau
// lattice; on such a grid the frequency marginal collapses to |q(u)|^2
// exactly (up to roundoff).
UniformGrid default_freq_grid(const UniformGrid& u_grid);

WignerMap wigner_map(const SampledSignal& s, const UniformGrid& freq_grid,
                     Exec exec = Exec::auto_policy);

// Integrates W over the line mu*u + nu*w = X (step min(du, dw)/2, bilinear
// interpolation, zero outside the map), normalized so that the slice masses
// sum to the map integral. Cross-validates the direct tomograms without
// sharing any code with them.
Tomogram radon_slice(const WignerMap& wm, const TomographyParams& p,
                     const UniformGrid& x_grid, Exec exec = Exec::auto_policy);

// Plain portable graymap (P2), min..max mapped to 0..255.
void write_pgm(const WignerMap& wm, std::ostream& out);

// One `u,omega,value` line per map entry.
void write_wigner_grid(const WignerMap& wm, std::ostream& out);

}  // namespace fractomo
