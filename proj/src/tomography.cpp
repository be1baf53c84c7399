#include "fractomo/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "fractomo/errors.hpp"
#include "fractomo/log.hpp"
#include "fractomo/signal_io.hpp"

namespace fractomo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinNuDirect = 1e-6;

// Tiny negative values from roundoff are floored; anything more negative is
// a real defect and is left visible for the invariant tests.
double clamp_floor(double w) { return (w < 0.0 && w >= -1e-12) ? 0.0 : w; }

// Catmull-Rom on a uniform lattice (exact through the nodes, reproduces
// cubics); clamped to the edge samples.
double cubic_sample(const std::vector<double>& v, double pos) {
    const std::int64_t n = static_cast<std::int64_t>(v.size());
    if (pos <= 0.0) return v.front();
    if (pos >= static_cast<double>(n - 1)) return v.back();
    const std::int64_t i1 = static_cast<std::int64_t>(std::floor(pos));
    const double t = pos - static_cast<double>(i1);
    const auto sample = [&](std::int64_t i) {
        i = std::clamp<std::int64_t>(i, 0, n - 1);
        return v[static_cast<std::size_t>(i)];
    };
    const double p0 = sample(i1 - 1), p1 = sample(i1), p2 = sample(i1 + 1),
                 p3 = sample(i1 + 2);
    const double a = -0.5 * p0 + 1.5 * p1 - 1.5 * p2 + 0.5 * p3;
    const double b = p0 - 2.5 * p1 + 2.0 * p2 - 0.5 * p3;
    const double c = -0.5 * p0 + 0.5 * p2;
    return ((a * t + b) * t + c) * t + p1;
}

}  // namespace

double TomographyParams::radius() const { return std::hypot(mu, nu); }

double TomographyParams::angle() const { return std::atan2(nu, mu); }

double Tomogram::total_mass() const {
    double sum = 0.0;
    for (const double w : values) sum += w;
    return sum * x_grid.step;
}

Tomogram tomogram(const SampledSignal& s, const TomographyParams& p,
                  const UniformGrid& x_grid, Exec exec) {
    validate_finite(s);
    if (std::abs(p.nu) < kMinNuDirect) {
        throw DomainError("tomogram: |nu| < 1e-6 makes the direct integral singular; "
                          "use tomogram_via_frft");
    }
    const UniformGrid& g = s.grid;
    const std::int64_t n = g.count;
    const double du = g.step;

    // chirp the signal once: q(u) exp(i mu u^2 / 2 nu)
    std::vector<cplx> chirped(static_cast<std::size_t>(n));
    const double half_mu_over_nu = p.mu / (2.0 * p.nu);
    for (std::int64_t j = 0; j < n; ++j) {
        const double u = g.point(j);
        chirped[static_cast<std::size_t>(j)] =
            s.values[static_cast<std::size_t>(j)] * std::polar(1.0, half_mu_over_nu * u * u);
    }

    Tomogram out;
    out.params = p;
    out.x_grid = x_grid;
    out.values.resize(static_cast<std::size_t>(x_grid.count));
    const double scale = 1.0 / (kTwoPi * std::abs(p.nu));
    parallel_for(
        x_grid.count,
        [&](std::int64_t i) {
            const double x = x_grid.point(i);
            // exp(-i X u_j / nu) by phase recurrence along the lattice
            const cplx step_rot = std::polar(1.0, -x * du / p.nu);
            cplx rot = std::polar(1.0, -x * g.start / p.nu);
            cplx acc = 0.0;
            for (std::int64_t j = 0; j < n; ++j) {
                acc += chirped[static_cast<std::size_t>(j)] * rot;
                rot *= step_rot;
            }
            out.values[static_cast<std::size_t>(i)] =
                clamp_floor(std::norm(acc * du) * scale);
        },
        exec);
    return out;
}

Tomogram tomogram_via_frft(const SampledSignal& s, const TomographyParams& p,
                           const UniformGrid& x_grid) {
    validate_finite(s);
    const double r = p.radius();
    if (r == 0.0) {
        throw DomainError("tomogram: (mu, nu) = (0, 0) is not a tomography direction");
    }
    // Dilated signal q~(z) = q(sqrt(2 pi) z): a pure grid relabel.
    const double root_two_pi = std::sqrt(kTwoPi);
    const SampledSignal dilated(s.grid.scaled(1.0 / root_two_pi), s.values);

    const FrftOrder order = reduce_order(p.angle() * 2.0 / kPi);
    const SampledSignal transformed = apply_frft_fast(dilated, order);

    std::vector<double> power(transformed.values.size());
    for (std::size_t i = 0; i < power.size(); ++i) {
        power[i] = std::norm(transformed.values[i]);
    }

    Tomogram out;
    out.params = p;
    out.x_grid = x_grid;
    out.values.resize(static_cast<std::size_t>(x_grid.count));
    const UniformGrid& zg = transformed.grid;
    const double inv_r = 1.0 / r;
    // roundoff slack so that a mapped lattice endpoint is not dropped
    const double slack = 1e-9 * static_cast<double>(zg.count);
    for (std::int64_t i = 0; i < x_grid.count; ++i) {
        const double z = x_grid.point(i) / (root_two_pi * r);
        const double pos = (z - zg.start) / zg.step;
        double w = 0.0;
        if (pos >= -slack && pos <= static_cast<double>(zg.count - 1) + slack) {
            w = std::max(0.0, cubic_sample(power, pos)) * inv_r;
        }
        out.values[static_cast<std::size_t>(i)] = w;
    }
    return out;
}

UniformGrid natural_x_grid(const SampledSignal& s, const TomographyParams& p) {
    const double r = p.radius();
    if (r == 0.0) {
        throw DomainError("tomogram: (mu, nu) = (0, 0) is not a tomography direction");
    }
    return s.grid.scaled(r);
}

double signal_bandwidth(const SampledSignal& s, double tail_mass) {
    // spectrum on the grid's frequency lattice; F^1 is the plain Fourier
    // transform in this convention, ordinary frequency u -> angular 2 pi u
    const SampledSignal spectrum = apply_frft_fast(s, reduce_order(1.0));
    const double total = l2_norm(spectrum);
    if (total == 0.0) return 0.0;
    double budget = tail_mass * total * total / spectrum.grid.step;
    double outer = 0.0;
    std::int64_t lo = 0;
    std::int64_t hi = spectrum.grid.count - 1;
    while (lo < hi) {
        const double lo_mass = std::norm(spectrum.values[static_cast<std::size_t>(lo)]);
        const double hi_mass = std::norm(spectrum.values[static_cast<std::size_t>(hi)]);
        const double next = std::min(lo_mass, hi_mass);
        if (outer + next > budget) break;
        outer += next;
        if (lo_mass <= hi_mass) {
            ++lo;
        } else {
            --hi;
        }
    }
    const double f = std::max(std::abs(spectrum.grid.point(lo)),
                              std::abs(spectrum.grid.point(hi)));
    return kTwoPi * f;
}

UniformGrid suggest_x_grid(const SampledSignal& s, const TomographyParams& p,
                           std::int64_t count) {
    const double u_max = std::max(std::abs(s.grid.start), std::abs(s.grid.back()));
    const double w_max = signal_bandwidth(s);
    const double half = std::abs(p.mu) * u_max + std::abs(p.nu) * w_max + 2.0;
    return symmetric_grid(half, count);
}

TomogramProvider make_direct_provider(const SampledSignal& s, Exec exec) {
    return [s, exec](const UniformGrid& x_grid, double mu, double nu) {
        const TomographyParams p{mu, nu};
        if (std::abs(nu) < kMinNuDirect) {
            // delta limit of the chirp integral; served by the bridge
            return tomogram_via_frft(s, p, x_grid);
        }
        return tomogram(s, p, x_grid, exec);
    };
}

TomogramProvider make_frft_provider(const SampledSignal& s) {
    return [s](const UniformGrid& x_grid, double mu, double nu) {
        return tomogram_via_frft(s, TomographyParams{mu, nu}, x_grid);
    };
}

UniformGrid default_mu_grid() { return UniformGrid(-40.0, 0.05, 1601); }

UniformGrid default_recon_x_grid() { return UniformGrid(-40.0, 0.05, 1601); }

CorrelationMatrix reconstruct_correlation(const TomogramProvider& provider,
                                          const UniformGrid& grid,
                                          const UniformGrid& mu_grid,
                                          const UniformGrid& x_grid, Exec exec) {
    const std::int64_t n = grid.count;
    const std::int64_t n_mu = mu_grid.count;
    const std::int64_t n_shift = 2 * n - 1;  // distinct nu = u - u' values
    const double du = grid.step;

    // Stage 1: X integral per (nu, mu):
    //   A(mu, nu) = sum_X w(X, mu, nu) exp(iX) dX.
    // nu = 0 is the delta limit of w; its X quadrature runs on the slice's
    // own scaled lattice, where the limit is exact, instead of x_grid.
    std::vector<cplx> x_phases(static_cast<std::size_t>(x_grid.count));
    for (std::int64_t m = 0; m < x_grid.count; ++m) {
        x_phases[static_cast<std::size_t>(m)] = std::polar(x_grid.step, x_grid.point(m));
    }

    std::vector<cplx> a_table(static_cast<std::size_t>(n_shift) *
                              static_cast<std::size_t>(n_mu));
    std::vector<double> row_ring(static_cast<std::size_t>(n_shift), 0.0);

    parallel_for(
        n_shift,
        [&](std::int64_t shift) {
            const double nu = static_cast<double>(shift - (n - 1)) * du;
            cplx* a_row = a_table.data() + shift * n_mu;
            double ring = 0.0;
            for (std::int64_t k = 0; k < n_mu; ++k) {
                const double mu = mu_grid.point(k);
                cplx acc = 0.0;
                if (nu == 0.0) {
                    // keep (mu, nu) away from the origin; the slice is the
                    // position density at any |mu| > 0
                    const double mu_eff = (mu == 0.0) ? 1e-12 : mu;
                    const UniformGrid slice_grid = grid.scaled(std::abs(mu_eff));
                    const Tomogram t = provider(slice_grid, mu_eff, 0.0);
                    for (std::int64_t m = 0; m < slice_grid.count; ++m) {
                        acc += t.values[static_cast<std::size_t>(m)] *
                               std::polar(slice_grid.step, slice_grid.point(m));
                    }
                    ring = std::max(ring, t.values.front() + t.values.back());
                } else {
                    const Tomogram t = provider(x_grid, mu, nu);
                    for (std::int64_t m = 0; m < x_grid.count; ++m) {
                        acc += t.values[static_cast<std::size_t>(m)] *
                               x_phases[static_cast<std::size_t>(m)];
                    }
                    ring = std::max(ring, t.values.front() + t.values.back());
                }
                a_row[k] = acc;
            }
            row_ring[static_cast<std::size_t>(shift)] = ring;
        },
        exec);

    // Truncation diagnostic on the mu integrand's envelope over all slices.
    // Slice values at the X-window ends bound the hard-cutoff ringing of the
    // X quadrature; an edge envelope at that floor reflects the X window,
    // not the mu window, so only an excess above the floor is reported.
    double envelope_peak = 0.0;
    double envelope_edge = 0.0;
    for (std::int64_t k = 0; k < n_mu; ++k) {
        double column = 0.0;
        for (std::int64_t shift = 0; shift < n_shift; ++shift) {
            column = std::max(column, std::abs(a_table[static_cast<std::size_t>(
                                          shift * n_mu + k)]));
        }
        envelope_peak = std::max(envelope_peak, column);
        if (k == 0 || k == n_mu - 1) envelope_edge = std::max(envelope_edge, column);
    }
    double ring_floor = 0.0;
    for (const double r : row_ring) ring_floor = std::max(ring_floor, r);
    if (envelope_edge > std::max(1e-3 * envelope_peak, 3.0 * ring_floor)) {
        log_notice("reconstruct_correlation: mu integrand at the window edge is " +
                   std::to_string(envelope_edge / envelope_peak) +
                   " of its peak; widen mu_grid for a converged inversion");
    }

    // Stage 2: mu integral per pair (u, u'):
    //   q(u) q*(u') = (1/2 pi) sum_mu A(mu, u-u') exp(-i mu (u+u')/2) dmu.
    CorrelationMatrix corr;
    corr.grid = grid;
    corr.entries.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    const double mu_weight = mu_grid.step / kTwoPi;
    parallel_for(
        n,
        [&](std::int64_t i) {
            const double u = grid.point(i);
            for (std::int64_t j = 0; j < n; ++j) {
                const double up = grid.point(j);
                const cplx* a_row = a_table.data() + (i - j + n - 1) * n_mu;
                const double mid = 0.5 * (u + up);
                // phase recurrence over the uniform mu lattice
                const cplx step_rot = std::polar(1.0, -mu_grid.step * mid);
                cplx rot = std::polar(1.0, -mu_grid.start * mid);
                cplx acc = 0.0;
                for (std::int64_t k = 0; k < n_mu; ++k) {
                    acc += a_row[k] * rot;
                    rot *= step_rot;
                }
                corr.entries[static_cast<std::size_t>(i * n + j)] = acc * mu_weight;
            }
        },
        exec);
    return corr;
}

SampledSignal reconstruct_signal(const CorrelationMatrix& corr) {
    const std::int64_t n = corr.grid.count;
    std::int64_t peak_index = 0;
    double peak = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double d = corr.at(i, i).real();
        if (d > peak) {
            peak = d;
            peak_index = i;
        }
    }
    if (!(peak > 1e-14)) {
        throw DomainError("reconstruct_signal: correlation diagonal is ~0 (empty signal)");
    }

    // q_rec(u) = corr(u, u*) / sqrt(corr(u*, u*)): real positive at u*, true
    // signal recovered up to the unobservable global phase
    const double scale = 1.0 / std::sqrt(peak);
    std::vector<cplx> values(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = corr.at(i, peak_index) * scale;
    }

    // rank-1 health: second-to-first singular value ratio by power iteration
    const auto matvec = [&](const std::vector<cplx>& v, const cplx* deflate,
                            double lambda) {
        std::vector<cplx> out(static_cast<std::size_t>(n), 0.0);
        for (std::int64_t i = 0; i < n; ++i) {
            cplx acc = 0.0;
            for (std::int64_t j = 0; j < n; ++j) {
                acc += corr.at(i, j) * v[static_cast<std::size_t>(j)];
            }
            out[static_cast<std::size_t>(i)] = acc;
        }
        if (deflate != nullptr) {
            cplx proj = 0.0;
            for (std::int64_t j = 0; j < n; ++j) {
                proj += std::conj(deflate[j]) * v[static_cast<std::size_t>(j)];
            }
            for (std::int64_t i = 0; i < n; ++i) {
                out[static_cast<std::size_t>(i)] -= lambda * proj * deflate[i];
            }
        }
        return out;
    };
    const auto normalize = [&](std::vector<cplx>& v) {
        double norm2 = 0.0;
        for (const cplx x : v) norm2 += std::norm(x);
        const double norm = std::sqrt(norm2);
        if (norm > 0.0) {
            for (cplx& x : v) x /= norm;
        }
        return norm;
    };

    std::vector<cplx> v1(values);
    normalize(v1);
    double sigma1 = 0.0;
    for (int iter = 0; iter < 30; ++iter) {
        v1 = matvec(v1, nullptr, 0.0);
        sigma1 = normalize(v1);
    }
    std::vector<cplx> v2(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        // deterministic start vector with no special symmetry
        v2[static_cast<std::size_t>(i)] =
            cplx(std::cos(0.7 * static_cast<double>(i) + 0.3),
                 std::sin(1.3 * static_cast<double>(i)));
    }
    normalize(v2);
    double sigma2 = 0.0;
    for (int iter = 0; iter < 30; ++iter) {
        v2 = matvec(v2, v1.data(), sigma1);
        sigma2 = normalize(v2);
    }
    if (sigma1 > 0.0 && sigma2 / sigma1 > 0.1) {
        log_notice("reconstruct_signal: correlation deviates from rank one "
                   "(sigma2/sigma1 = " +
                   std::to_string(sigma2 / sigma1) + ")");
    }

    return SampledSignal(corr.grid, std::move(values));
}

double fidelity(const SampledSignal& a, const SampledSignal& b) {
    const double na = l2_norm(a);
    const double nb = l2_norm(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::abs(inner_product(a, b)) / (na * nb);
}

void dump_correlation(const CorrelationMatrix& corr, std::ostream& out) {
    for (std::int64_t i = 0; i < corr.grid.count; ++i) {
        for (std::int64_t j = 0; j < corr.grid.count; ++j) {
            const cplx v = corr.at(i, j);
            out << i << ',' << j << ',' << format_double(v.real()) << ','
                << format_double(v.imag()) << '\n';
        }
    }
}

}  // namespace fractomo
