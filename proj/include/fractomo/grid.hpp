#pragma once

#include <cstdint>

namespace fractomo {

// Uniform sampling lattice start + i*step, i in [0, count).
struct UniformGrid {
    double start = 0.0;
    double step = 1.0;
    std::int64_t count = 2;

    UniformGrid() = default;
    UniformGrid(double start_, double step_, std::int64_t count_);

    double point(std::int64_t i) const { return start + static_cast<double>(i) * step; }
    double back() const { return point(count - 1); }

    // Scales all abscissae by a positive factor (relabels the axis).
    UniformGrid scaled(double factor) const;

    bool operator==(const UniformGrid&) const = default;
};

// Grid symmetric about 0 with the half-open span [-half_width, half_width).
UniformGrid symmetric_grid(double half_width, std::int64_t count);

// Default lattice for the bundled physics signals: u in [-8, 8), step 1/64.
UniformGrid default_signal_grid();

}  // namespace fractomo
