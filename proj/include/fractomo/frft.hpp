#pragma once

#include <iosfwd>

#include "fractomo/exec.hpp"
#include "fractomo/signal.hpp"

namespace fractomo {

// Fractional transform order a in (-2, 2], angle phi = a*pi/2 and
// phi_hat = sgn(sin phi). phi_hat == 0 exactly for a in {0, 2}.
struct FrftOrder {
    double a = 0.0;
    double phi = 0.0;
    int phi_hat = 0;

    bool degenerate() const { return phi_hat == 0; }
};

// Reduces a raw order mod 4 into (-2, 2]. Throws DomainError on non-finite
// input. The (-2, 2] convention keeps inversion a -> -a in-domain.
FrftOrder reduce_order(double a_raw);

// Dense complex kernel matrix on a grid product, applied as
// out_i = sum_j entries[i][j] * q_j * quadrature_weight.
struct TransformKernel {
    UniformGrid row_grid;
    UniformGrid col_grid;
    std::vector<cplx> entries;  // row-major, row_grid.count x col_grid.count
    double quadrature_weight = 0.0;

    cplx at(std::int64_t i, std::int64_t j) const {
        return entries[static_cast<std::size_t>(i * col_grid.count + j)];
    }
};

// Fractional Fourier kernel
//   B_a(u, u') = exp(-i(pi*phi_hat/4 - phi/2)) |sin phi|^{-1/2}
//                * exp(i pi (u^2 cot phi - 2 u u'/sin phi + u'^2 cot phi)).
// Throws DomainError for degenerate orders (apply_frft special-cases those).
TransformKernel build_frft_kernel(const FrftOrder& order, const UniformGrid& grid,
                                  Exec exec = Exec::auto_policy);

// out_i = sum_j entries[i][j] * q_j * quadrature_weight. Signal grid must
// match the kernel column grid.
SampledSignal apply_kernel(const TransformKernel& kernel, const SampledSignal& s,
                           Exec exec = Exec::auto_policy);

// Quadrature-path transform. a = 0 returns the input bitwise, a = 2 the
// parity-reversed signal q(-u); near-degenerate orders (|sin phi| < 0.35)
// route through F^a = F^{a-1} o F^1 to keep chirp rates below the lattice
// Nyquist limit.
SampledSignal apply_frft(const SampledSignal& s, const FrftOrder& order,
                         Exec exec = Exec::auto_policy);

// Chirp-multiply / convolve / chirp-multiply decomposition of the same sum,
// O(N log N) for power-of-two grids; other lengths fall back to quadrature
// with a logged notice. Matches apply_frft to roundoff.
SampledSignal apply_frft_fast(const SampledSignal& s, const FrftOrder& order);

// Parity reflection q(-u) onto the same grid; exact index reversal where
// -u lands on the lattice, linear interpolation otherwise, zero outside.
SampledSignal parity_reverse(const SampledSignal& s);

// Debug dump, one `row,col,re,im` line per entry.
void dump_kernel(const TransformKernel& kernel, std::ostream& out);

}  // namespace fractomo
