#include "fractomo/grid.hpp"

#include <cmath>
#include <string>

#include "fractomo/errors.hpp"

namespace fractomo {

UniformGrid::UniformGrid(double start_, double step_, std::int64_t count_)
    : start(start_), step(step_), count(count_) {
    if (!std::isfinite(start) || !std::isfinite(step)) {
        throw DomainError("grid: start and step must be finite");
    }
    if (step <= 0.0) {
        throw DomainError("grid: step must be > 0, got " + std::to_string(step));
    }
    if (count < 2) {
        throw DomainError("grid: count must be >= 2, got " + std::to_string(count));
    }
}

UniformGrid UniformGrid::scaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw DomainError("grid: scale factor must be positive and finite");
    }
    return UniformGrid(start * factor, step * factor, count);
}

UniformGrid symmetric_grid(double half_width, std::int64_t count) {
    if (!(half_width > 0.0)) {
        throw DomainError("grid: half_width must be > 0");
    }
    const double step = 2.0 * half_width / static_cast<double>(count);
    return UniformGrid(-half_width, step, count);
}

UniformGrid default_signal_grid() { return UniformGrid(-8.0, 1.0 / 64.0, 1024); }

}  // namespace fractomo
