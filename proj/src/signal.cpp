#include "fractomo/signal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fractomo/errors.hpp"
#include "fractomo/fft.hpp"

namespace fractomo {

SampledSignal::SampledSignal(UniformGrid grid_, std::vector<cplx> values_)
    : grid(grid_), values(std::move(values_)) {
    if (static_cast<std::int64_t>(values.size()) != grid.count) {
        throw DomainError("signal: " + std::to_string(values.size()) +
                          " values for a grid of " + std::to_string(grid.count) +
                          " points");
    }
}

void validate_finite(const SampledSignal& s) {
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const cplx v = s.values[i];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw DomainError("signal: non-finite sample at index " + std::to_string(i));
        }
    }
}

double l2_norm(const SampledSignal& s) {
    validate_finite(s);
    double sum = 0.0;
    for (const cplx v : s.values) {
        sum += std::norm(v);
    }
    return std::sqrt(sum * s.grid.step);
}

NormStatus norm_status(const SampledSignal& s, double tol) {
    NormStatus status;
    status.l2_norm = l2_norm(s);
    status.is_normalized = std::abs(status.l2_norm - 1.0) <= tol;
    return status;
}

cplx inner_product(const SampledSignal& a, const SampledSignal& b) {
    if (a.grid != b.grid) {
        throw DomainError("inner_product: signals live on different grids");
    }
    cplx sum = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        sum += std::conj(a.values[i]) * b.values[i];
    }
    return sum * a.grid.step;
}

SampledSignal scaled(const SampledSignal& s, cplx factor) {
    std::vector<cplx> out(s.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = s.values[i] * factor;
    }
    return SampledSignal(s.grid, std::move(out));
}

namespace {

cplx linear_sample(const SampledSignal& s, double u) {
    const UniformGrid& g = s.grid;
    const double pos = (u - g.start) / g.step;
    std::int64_t i0 = static_cast<std::int64_t>(std::floor(pos));
    if (i0 < 0) i0 = 0;
    if (i0 > g.count - 2) i0 = g.count - 2;
    const double frac = pos - static_cast<double>(i0);
    // v0 + f*(v1 - v0): exact on constants and at lattice points
    const cplx v0 = s.values[static_cast<std::size_t>(i0)];
    const cplx v1 = s.values[static_cast<std::size_t>(i0 + 1)];
    return v0 + frac * (v1 - v0);
}

// Evaluates the trigonometric interpolant fixed by the DFT coefficients at an
// arbitrary abscissa. O(N) per point; adequate for the occasional regrid.
SampledSignal bandlimited_resample(const SampledSignal& s, const UniformGrid& target) {
    const std::int64_t n = s.grid.count;
    std::vector<cplx> coeff(s.values);
    if (is_pow2(n)) {
        fft_pow2(coeff, false);
    } else {
        // direct DFT for odd lengths
        std::vector<cplx> out(static_cast<std::size_t>(n));
        const double w = -2.0 * std::numbers::pi / static_cast<double>(n);
        for (std::int64_t k = 0; k < n; ++k) {
            cplx acc = 0.0;
            for (std::int64_t j = 0; j < n; ++j) {
                acc += s.values[static_cast<std::size_t>(j)] *
                       std::polar(1.0, w * static_cast<double>(k * j));
            }
            out[static_cast<std::size_t>(k)] = acc;
        }
        coeff = std::move(out);
    }

    std::vector<cplx> values(static_cast<std::size_t>(target.count));
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::int64_t i = 0; i < target.count; ++i) {
        // fractional lattice position relative to the source grid
        const double pos = (target.point(i) - s.grid.start) / s.grid.step;
        cplx acc = 0.0;
        for (std::int64_t k = 0; k < n; ++k) {
            // signed frequency: k > n/2 aliases to k - n
            const std::int64_t f = (2 * k > n) ? k - n : k;
            acc += coeff[static_cast<std::size_t>(k)] *
                   std::polar(inv_n,
                              2.0 * std::numbers::pi * static_cast<double>(f) * pos * inv_n);
        }
        values[static_cast<std::size_t>(i)] = acc;
    }
    return SampledSignal(target, std::move(values));
}

}  // namespace

SampledSignal resample(const SampledSignal& s, const UniformGrid& target, Interp method) {
    validate_finite(s);
    if (target == s.grid) {
        return s;  // bitwise identity
    }
    const double lo = s.grid.start;
    const double hi = s.grid.back();
    const double jitter = 1e-12 * std::max(1.0, std::abs(hi));
    if (target.start < lo - jitter || target.back() > hi + jitter) {
        throw DomainError("resample: target grid extends outside the source span");
    }
    if (method == Interp::bandlimited) {
        return bandlimited_resample(s, target);
    }
    std::vector<cplx> values(static_cast<std::size_t>(target.count));
    for (std::int64_t i = 0; i < target.count; ++i) {
        values[static_cast<std::size_t>(i)] = linear_sample(s, target.point(i));
    }
    return SampledSignal(target, std::move(values));
}

}  // namespace fractomo
