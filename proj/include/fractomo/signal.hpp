#pragma once

#include <complex>
#include <vector>

#include "fractomo/grid.hpp"

namespace fractomo {

using cplx = std::complex<double>;

// Complex analytic signal q(u) sampled on a uniform grid. Immutable by
// convention: operations return new signals.
struct SampledSignal {
    UniformGrid grid;
    std::vector<cplx> values;

    SampledSignal() = default;
    SampledSignal(UniformGrid grid_, std::vector<cplx> values_);

    std::int64_t size() const { return grid.count; }
};

struct NormStatus {
    double l2_norm = 0.0;
    bool is_normalized = false;
};

// sqrt(sum |q_i|^2 * step); uniform-weight Riemann rule, the quadrature
// convention used throughout (test signals decay to ~0 at the grid edges).
double l2_norm(const SampledSignal& s);

NormStatus norm_status(const SampledSignal& s, double tol = 1e-6);

// sum conj(a_i) * b_i * step; conjugate-linear in the first argument.
cplx inner_product(const SampledSignal& a, const SampledSignal& b);

enum class Interp {
    linear,
    bandlimited,  // trigonometric interpolation from the DFT coefficients
};

// Resamples onto a grid inside the source span. Exact on the identity grid
// (bitwise) and on constants.
SampledSignal resample(const SampledSignal& s, const UniformGrid& target,
                       Interp method = Interp::linear);

SampledSignal scaled(const SampledSignal& s, cplx factor);

// Throws if any value is non-finite; message names the first bad index.
void validate_finite(const SampledSignal& s);

}  // namespace fractomo
