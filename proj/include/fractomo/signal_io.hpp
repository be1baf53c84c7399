#pragma once

#include <iosfwd>
#include <string>

#include "fractomo/signal.hpp"
#include "fractomo/tomography.hpp"

namespace fractomo {

// Shortest round-trip decimal formatting; reading back reproduces the
// double bit for bit. All text artifacts use it so outputs diff cleanly.
std::string format_double(double value);
double parse_double(const std::string& text, const std::string& context);

// fractomo-signal v1: header line `# fractomo-signal v1`, then one
// `index,u,re,im` line per sample. The grid is inferred from the u column
// and validated for uniformity within 1e-9 relative step jitter.
void write_signal(const SampledSignal& s, std::ostream& out);
SampledSignal read_signal(std::istream& in);

void write_signal_file(const SampledSignal& s, const std::string& path);
SampledSignal read_signal_file(const std::string& path);

// fractomo-tomogram v1: header, `mu=` and `nu=` lines, then `X,w` rows.
void write_tomogram(const Tomogram& t, std::ostream& out);
Tomogram read_tomogram(std::istream& in);

void write_tomogram_file(const Tomogram& t, const std::string& path);
Tomogram read_tomogram_file(const std::string& path);

}  // namespace fractomo
