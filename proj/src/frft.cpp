#include "fractomo/frft.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "fractomo/errors.hpp"
#include "fractomo/fft.hpp"
#include "fractomo/log.hpp"
#include "fractomo/signal_io.hpp"

namespace fractomo {

namespace {

constexpr double kPi = std::numbers::pi;

// Orders with |sin phi| below this are composed as F^{a-1} o F^1: the factor
// orders sit near +-1 where the chirp rates u^2 cot phi and u u'/sin phi stay
// representable on the sampling lattice. The band is wide on purpose; by
// |sin phi| ~ 0.35 the direct chirp quadrature already brushes the Nyquist
// limit of the default grids, and below ~1e-3 it is catastrophically aliased
// (that regime additionally logs a notice).
constexpr double kComposeBelowSin = 0.35;
constexpr double kWarnBelowSin = 1e-3;

}  // namespace

FrftOrder reduce_order(double a_raw) {
    if (!std::isfinite(a_raw)) {
        throw DomainError("frft order: non-finite value");
    }
    double a = std::fmod(a_raw, 4.0);  // (-4, 4), exact for representable inputs
    if (a > 2.0) a -= 4.0;
    if (a <= -2.0) a += 4.0;

    FrftOrder order;
    order.a = a;
    order.phi = a * (kPi / 2.0);
    // sin(a pi/2) vanishes exactly at a in {0, 2}; the sign elsewhere is the
    // sign of a on (-2, 2), decided without evaluating sin near its zeros.
    if (a == 0.0 || a == 2.0) {
        order.phi_hat = 0;
    } else {
        order.phi_hat = a > 0.0 ? 1 : -1;
    }
    return order;
}

TransformKernel build_frft_kernel(const FrftOrder& order, const UniformGrid& grid,
                                  Exec exec) {
    if (order.degenerate()) {
        throw DomainError(
            "frft kernel: order a = " + std::to_string(order.a) +
            " has a delta kernel; use apply_frft, which special-cases a = 0 and a = 2");
    }
    const double sin_phi = std::sin(order.phi);
    const double cot_phi = std::cos(order.phi) / sin_phi;
    const cplx constant =
        std::polar(1.0 / std::sqrt(std::abs(sin_phi)),
                   -(kPi * order.phi_hat / 4.0 - order.phi / 2.0));

    TransformKernel kernel;
    kernel.row_grid = grid;
    kernel.col_grid = grid;
    kernel.quadrature_weight = grid.step;
    kernel.entries.resize(static_cast<std::size_t>(grid.count) *
                          static_cast<std::size_t>(grid.count));

    const std::int64_t n = grid.count;
    cplx* entries = kernel.entries.data();
    parallel_for(
        n,
        [&](std::int64_t i) {
            const double u = grid.point(i);
            const double diag_u = u * u * cot_phi;
            cplx* row = entries + i * n;
            for (std::int64_t j = 0; j < n; ++j) {
                const double up = grid.point(j);
                const double phase =
                    kPi * (diag_u - 2.0 * u * up / sin_phi + up * up * cot_phi);
                row[j] = constant * std::polar(1.0, phase);
            }
        },
        exec);
    return kernel;
}

SampledSignal apply_kernel(const TransformKernel& kernel, const SampledSignal& s,
                           Exec exec) {
    if (s.grid != kernel.col_grid) {
        throw DomainError("apply_kernel: signal grid does not match the kernel column grid");
    }
    const std::int64_t rows = kernel.row_grid.count;
    const std::int64_t cols = kernel.col_grid.count;
    std::vector<cplx> out(static_cast<std::size_t>(rows));
    const cplx* entries = kernel.entries.data();
    const cplx* q = s.values.data();
    const double weight = kernel.quadrature_weight;
    parallel_for(
        rows,
        [&](std::int64_t i) {
            const cplx* row = entries + i * cols;
            cplx acc = 0.0;
            for (std::int64_t j = 0; j < cols; ++j) {
                acc += row[j] * q[j];
            }
            out[static_cast<std::size_t>(i)] = acc * weight;
        },
        exec);
    return SampledSignal(kernel.row_grid, std::move(out));
}

SampledSignal parity_reverse(const SampledSignal& s) {
    const UniformGrid& g = s.grid;
    std::vector<cplx> out(static_cast<std::size_t>(g.count));
    const double jitter = 1e-9 * g.step;
    for (std::int64_t i = 0; i < g.count; ++i) {
        const double target = -g.point(i);
        const double pos = (target - g.start) / g.step;
        const double nearest = std::round(pos);
        if (std::abs(pos - nearest) <= jitter && nearest >= 0 &&
            nearest < static_cast<double>(g.count)) {
            out[static_cast<std::size_t>(i)] =
                s.values[static_cast<std::size_t>(nearest)];
        } else if (pos >= 0.0 && pos <= static_cast<double>(g.count - 1)) {
            const std::int64_t i0 = static_cast<std::int64_t>(std::floor(pos));
            const std::int64_t i1 = std::min(i0 + 1, g.count - 1);
            const double frac = pos - static_cast<double>(i0);
            const cplx v0 = s.values[static_cast<std::size_t>(i0)];
            const cplx v1 = s.values[static_cast<std::size_t>(i1)];
            out[static_cast<std::size_t>(i)] = v0 + frac * (v1 - v0);
        } else {
            // -u falls outside the span (the unmatched edge point of a
            // half-open symmetric grid); signals are assumed to have decayed
            out[static_cast<std::size_t>(i)] = 0.0;
        }
    }
    return SampledSignal(g, std::move(out));
}

namespace {

// Composition used for near-degenerate orders: F^a = F^{a-1} o F^1. The
// factor orders land at |a - 1| ~ 1, where chirp rates are benign.
template <typename ApplyFn>
SampledSignal apply_composed(const SampledSignal& s, const FrftOrder& order,
                             const ApplyFn& apply) {
    if (std::abs(std::sin(order.phi)) < kWarnBelowSin) {
        log_notice("frft: order a = " + std::to_string(order.a) +
                   " is near-degenerate; composing F^{a-1} after F^1");
    }
    const SampledSignal mid = apply(s, reduce_order(1.0));
    return apply(mid, reduce_order(order.a - 1.0));
}

}  // namespace

SampledSignal apply_frft(const SampledSignal& s, const FrftOrder& order, Exec exec) {
    validate_finite(s);
    if (order.a == 0.0) {
        return s;  // B_0 = delta(u - u')
    }
    if (order.a == 2.0) {
        return parity_reverse(s);  // B_2 = delta(u + u')
    }
    if (std::abs(std::sin(order.phi)) < kComposeBelowSin) {
        return apply_composed(s, order, [exec](const SampledSignal& x, const FrftOrder& o) {
            return apply_frft(x, o, exec);
        });
    }
    return apply_kernel(build_frft_kernel(order, s.grid, exec), s, exec);
}

namespace {

// Fast path for non-degenerate orders on power-of-two grids. Splitting the
// kernel phase pi(u^2 cot - 2 u u'/sin + u'^2 cot) around the cross term and
// expanding u_i u_j on the lattice turns the sum into a chirp-premultiply,
// a linear convolution against a fixed chirp, and a chirp-postmultiply; the
// convolution runs through zero-padded FFTs. Exactly the quadrature sum,
// reassociated.
SampledSignal frft_chirp_fft(const SampledSignal& s, const FrftOrder& order) {
    const UniformGrid& g = s.grid;
    const std::int64_t n = g.count;
    const double sin_phi = std::sin(order.phi);
    const double cot_phi = std::cos(order.phi) / sin_phi;
    const cplx constant =
        std::polar(1.0 / std::sqrt(std::abs(sin_phi)),
                   -(kPi * order.phi_hat / 4.0 - order.phi / 2.0));

    const double u0 = g.start;
    const double du = g.step;
    const double chirp_rate = du * du / sin_phi;       // c: pairs with i*j
    const double shear = u0 * du / sin_phi;            // s: pairs with i + j
    const double offset = u0 * u0 / sin_phi;           // constant term

    const std::int64_t m = next_pow2(2 * n - 1);
    std::vector<cplx> x(static_cast<std::size_t>(m), 0.0);
    std::vector<cplx> y(static_cast<std::size_t>(m), 0.0);

    for (std::int64_t j = 0; j < n; ++j) {
        const double up = g.point(j);
        const double jd = static_cast<double>(j);
        const double phase = kPi * up * up * cot_phi        // entry chirp
                             - 2.0 * kPi * shear * jd       // lattice shear
                             - kPi * chirp_rate * jd * jd;  // Bluestein split
        x[static_cast<std::size_t>(j)] =
            s.values[static_cast<std::size_t>(j)] * std::polar(1.0, phase);
    }
    for (std::int64_t k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const cplx tap = std::polar(1.0, kPi * chirp_rate * kd * kd);
        y[static_cast<std::size_t>(k)] = tap;
        if (k > 0) y[static_cast<std::size_t>(m - k)] = tap;  // negative lags
    }

    fft_pow2(x, false);
    fft_pow2(y, false);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= y[i];
    fft_pow2(x, true);

    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const double u = g.point(i);
        const double id = static_cast<double>(i);
        const double phase = kPi * u * u * cot_phi - 2.0 * kPi * offset -
                             2.0 * kPi * shear * id - kPi * chirp_rate * id * id;
        out[static_cast<std::size_t>(i)] =
            constant * du * std::polar(1.0, phase) * x[static_cast<std::size_t>(i)];
    }
    return SampledSignal(g, std::move(out));
}

}  // namespace

SampledSignal apply_frft_fast(const SampledSignal& s, const FrftOrder& order) {
    validate_finite(s);
    if (order.a == 0.0) {
        return s;
    }
    if (order.a == 2.0) {
        return parity_reverse(s);
    }
    if (!is_pow2(s.grid.count)) {
        log_notice("frft fast path needs a power-of-two grid (got " +
                   std::to_string(s.grid.count) + " points); using quadrature");
        return apply_frft(s, order);
    }
    if (std::abs(std::sin(order.phi)) < kComposeBelowSin) {
        return apply_composed(s, order, [](const SampledSignal& x, const FrftOrder& o) {
            return apply_frft_fast(x, o);
        });
    }
    return frft_chirp_fft(s, order);
}

void dump_kernel(const TransformKernel& kernel, std::ostream& out) {
    for (std::int64_t i = 0; i < kernel.row_grid.count; ++i) {
        for (std::int64_t j = 0; j < kernel.col_grid.count; ++j) {
            const cplx v = kernel.at(i, j);
            out << i << ',' << j << ',' << format_double(v.real()) << ','
                << format_double(v.imag()) << '\n';
        }
    }
}

}  // namespace fractomo
