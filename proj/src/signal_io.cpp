#include "fractomo/signal_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "fractomo/errors.hpp"

namespace fractomo {

namespace {

constexpr char kSignalHeader[] = "# fractomo-signal v1";
constexpr char kTomogramHeader[] = "# fractomo-tomogram v1";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = line.find(',', begin);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(begin));
            break;
        }
        fields.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
    return fields;
}

// Infers the uniform grid from an abscissa column and validates the step
// jitter (1e-9 relative).
UniformGrid infer_grid(const std::vector<double>& abscissae, const std::string& what) {
    const std::size_t n = abscissae.size();
    if (n < 2) {
        throw ParseError(what + ": need at least 2 samples, got " + std::to_string(n));
    }
    const double start = abscissae.front();
    const double step =
        (abscissae.back() - start) / static_cast<double>(n - 1);
    if (!(step > 0.0)) {
        throw ParseError(what + ": abscissae must be strictly increasing");
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double local = abscissae[i] - abscissae[i - 1];
        if (std::abs(local - step) > 1e-9 * std::abs(step)) {
            throw ParseError(what + ": non-uniform step at row " + std::to_string(i) +
                             " (got " + format_double(local) + ", expected " +
                             format_double(step) + ")");
        }
    }
    return UniformGrid(start, step, static_cast<std::int64_t>(n));
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

double parse_double(const std::string& text, const std::string& context) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end) {
        throw ParseError(context + ": cannot parse number '" + text + "'");
    }
    return value;
}

void write_signal(const SampledSignal& s, std::ostream& out) {
    out << kSignalHeader << '\n';
    for (std::int64_t i = 0; i < s.grid.count; ++i) {
        const cplx v = s.values[static_cast<std::size_t>(i)];
        out << i << ',' << format_double(s.grid.point(i)) << ','
            << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
}

SampledSignal read_signal(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSignalHeader) {
        throw ParseError("signal file: line 1: expected header '" +
                         std::string(kSignalHeader) + "'");
    }
    std::vector<double> abscissae;
    std::vector<cplx> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        const std::string where = "signal file: line " + std::to_string(line_no);
        if (fields.size() != 4) {
            throw ParseError(where + ": expected index,u,re,im");
        }
        const double index = parse_double(fields[0], where);
        if (index != static_cast<double>(values.size())) {
            throw ParseError(where + ": sample index " + fields[0] +
                             " out of order (expected " +
                             std::to_string(values.size()) + ")");
        }
        abscissae.push_back(parse_double(fields[1], where));
        values.emplace_back(parse_double(fields[2], where), parse_double(fields[3], where));
    }
    const UniformGrid grid = infer_grid(abscissae, "signal file");
    SampledSignal s(grid, std::move(values));
    validate_finite(s);
    return s;
}

void write_signal_file(const SampledSignal& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_signal(s, out);
    if (!out.good()) throw ParseError("write failed for '" + path + "'");
}

SampledSignal read_signal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_signal(in);
}

void write_tomogram(const Tomogram& t, std::ostream& out) {
    out << kTomogramHeader << '\n';
    out << "mu=" << format_double(t.params.mu) << '\n';
    out << "nu=" << format_double(t.params.nu) << '\n';
    for (std::int64_t i = 0; i < t.x_grid.count; ++i) {
        out << format_double(t.x_grid.point(i)) << ','
            << format_double(t.values[static_cast<std::size_t>(i)]) << '\n';
    }
}

Tomogram read_tomogram(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kTomogramHeader) {
        throw ParseError("tomogram file: line 1: expected header '" +
                         std::string(kTomogramHeader) + "'");
    }
    Tomogram t;
    if (!std::getline(in, line) || line.rfind("mu=", 0) != 0) {
        throw ParseError("tomogram file: line 2: expected 'mu=<float>'");
    }
    t.params.mu = parse_double(line.substr(3), "tomogram file: line 2");
    if (!std::getline(in, line) || line.rfind("nu=", 0) != 0) {
        throw ParseError("tomogram file: line 3: expected 'nu=<float>'");
    }
    t.params.nu = parse_double(line.substr(3), "tomogram file: line 3");

    std::vector<double> abscissae;
    std::size_t line_no = 3;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        const std::string where = "tomogram file: line " + std::to_string(line_no);
        if (fields.size() != 2) {
            throw ParseError(where + ": expected X,w");
        }
        abscissae.push_back(parse_double(fields[0], where));
        t.values.push_back(parse_double(fields[1], where));
    }
    t.x_grid = infer_grid(abscissae, "tomogram file");
    return t;
}

void write_tomogram_file(const Tomogram& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_tomogram(t, out);
    if (!out.good()) throw ParseError("write failed for '" + path + "'");
}

Tomogram read_tomogram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_tomogram(in);
}

}  // namespace fractomo
