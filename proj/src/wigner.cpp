#include "fractomo/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "fractomo/errors.hpp"
#include "fractomo/signal_io.hpp"

namespace fractomo {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

UniformGrid default_freq_grid(const UniformGrid& u_grid) {
    // One full period pi/du of the tau lattice, centered on zero, so the
    // frequency marginal collapses exactly; four samples per signal point
    // keep linear interpolation of interference fringes inside the radon
    // slice tolerances.
    const std::int64_t count = 4 * u_grid.count;
    const double period = kPi / u_grid.step;
    return UniformGrid(-period / 2.0, period / static_cast<double>(count), count);
}

WignerMap wigner_map(const SampledSignal& s, const UniformGrid& freq_grid, Exec exec) {
    validate_finite(s);
    const UniformGrid& g = s.grid;
    const std::int64_t n = g.count;
    const std::int64_t n_freq = freq_grid.count;
    const double du = g.step;

    WignerMap map;
    map.u_grid = g;
    map.freq_grid = freq_grid;
    map.values.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n_freq));

    // tau runs over even lattice offsets 2 m du so both q(u + tau/2) and
    // q(u - tau/2) stay on the lattice; the m = -m terms pair into one real
    // cosine sum, so the map is real by construction
    parallel_for(
        n,
        [&](std::int64_t iu) {
            const std::int64_t m_max = std::min(iu, n - 1 - iu);
            const cplx* q = s.values.data();
            double* row = map.values.data() + iu * n_freq;
            const double on_axis = std::norm(q[iu]);
            for (std::int64_t k = 0; k < n_freq; ++k) {
                const double omega = freq_grid.point(k);
                const cplx rot_step = std::polar(1.0, -2.0 * omega * du);
                cplx rot = rot_step;
                double acc = on_axis;
                for (std::int64_t m = 1; m <= m_max; ++m) {
                    const cplx pair = q[iu + m] * std::conj(q[iu - m]);
                    acc += 2.0 * (pair * rot).real();
                    rot *= rot_step;
                }
                row[k] = acc * du / kPi;  // dtau = 2 du, prefactor 1/(2 pi)
            }
        },
        exec);
    return map;
}

namespace {

double bilinear(const WignerMap& wm, double u, double omega) {
    const UniformGrid& ug = wm.u_grid;
    const UniformGrid& fg = wm.freq_grid;
    const double pu = (u - ug.start) / ug.step;
    const double pw = (omega - fg.start) / fg.step;
    if (pu < 0.0 || pu > static_cast<double>(ug.count - 1) || pw < 0.0 ||
        pw > static_cast<double>(fg.count - 1)) {
        return 0.0;
    }
    const std::int64_t i0 = std::min<std::int64_t>(static_cast<std::int64_t>(pu),
                                                   ug.count - 2);
    const std::int64_t k0 = std::min<std::int64_t>(static_cast<std::int64_t>(pw),
                                                   fg.count - 2);
    const double fu = pu - static_cast<double>(i0);
    const double fw = pw - static_cast<double>(k0);
    const double w00 = wm.at(i0, k0), w01 = wm.at(i0, k0 + 1);
    const double w10 = wm.at(i0 + 1, k0), w11 = wm.at(i0 + 1, k0 + 1);
    return (1.0 - fu) * ((1.0 - fw) * w00 + fw * w01) +
           fu * ((1.0 - fw) * w10 + fw * w11);
}

}  // namespace

Tomogram radon_slice(const WignerMap& wm, const TomographyParams& p,
                     const UniformGrid& x_grid, Exec exec) {
    const double r = p.radius();
    if (r == 0.0) {
        throw DomainError("radon_slice: (mu, nu) = (0, 0) is not a direction");
    }
    // unit direction along the line mu*u + nu*omega = X
    const double dir_u = p.nu / r;
    const double dir_w = -p.mu / r;
    const double ds = std::min(wm.u_grid.step, wm.freq_grid.step) / 2.0;

    // long enough to cross the whole map whatever the angle
    const double span_u = wm.u_grid.step * static_cast<double>(wm.u_grid.count);
    const double span_w = wm.freq_grid.step * static_cast<double>(wm.freq_grid.count);
    const double half_len = std::hypot(span_u, span_w) / 2.0 + ds;
    const std::int64_t n_steps = static_cast<std::int64_t>(std::ceil(half_len / ds));

    const double mid_u = wm.u_grid.start + span_u / 2.0;
    const double mid_w = wm.freq_grid.start + span_w / 2.0;

    Tomogram out;
    out.params = p;
    out.x_grid = x_grid;
    out.values.resize(static_cast<std::size_t>(x_grid.count));
    parallel_for(
        x_grid.count,
        [&](std::int64_t i) {
            const double x = x_grid.point(i);
            // closest point of the line to the map center, then walk both ways
            const double t0 = (x - p.mu * mid_u - p.nu * mid_w) / r;
            const double base_u = mid_u + t0 * p.mu / r;
            const double base_w = mid_w + t0 * p.nu / r;
            double acc = 0.0;
            for (std::int64_t step = -n_steps; step <= n_steps; ++step) {
                const double sdist = static_cast<double>(step) * ds;
                acc += bilinear(wm, base_u + sdist * dir_u, base_w + sdist * dir_w);
            }
            // delta(X - mu u - nu w) integrates to arclength / r
            double w = acc * ds / r;
            if (w < 0.0 && w >= -1e-12) w = 0.0;
            out.values[static_cast<std::size_t>(i)] = w;
        },
        exec);
    return out;
}

void write_pgm(const WignerMap& wm, std::ostream& out) {
    double lo = wm.values.empty() ? 0.0 : wm.values.front();
    double hi = lo;
    for (const double v : wm.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double scale = hi > lo ? 255.0 / (hi - lo) : 0.0;
    out << "P2\n" << wm.freq_grid.count << ' ' << wm.u_grid.count << "\n255\n";
    for (std::int64_t iu = 0; iu < wm.u_grid.count; ++iu) {
        for (std::int64_t k = 0; k < wm.freq_grid.count; ++k) {
            const int level = static_cast<int>(std::lround((wm.at(iu, k) - lo) * scale));
            out << level << (k + 1 == wm.freq_grid.count ? '\n' : ' ');
        }
    }
}

void write_wigner_grid(const WignerMap& wm, std::ostream& out) {
    for (std::int64_t iu = 0; iu < wm.u_grid.count; ++iu) {
        for (std::int64_t k = 0; k < wm.freq_grid.count; ++k) {
            out << format_double(wm.u_grid.point(iu)) << ','
                << format_double(wm.freq_grid.point(k)) << ','
                << format_double(wm.at(iu, k)) << '\n';
        }
    }
}

}  // namespace fractomo
