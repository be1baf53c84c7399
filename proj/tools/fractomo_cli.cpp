// fractomo command line: transforms, tomograms and verification reports for
// sampled analytic signals. Exit codes: 0 ok, 2 usage/parse, 3 numeric
// domain, 4 verification failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fractomo/errors.hpp"
#include "fractomo/oscillator.hpp"
#include "fractomo/signal_io.hpp"
#include "fractomo/test_signals.hpp"
#include "fractomo/tomography.hpp"
#include "fractomo/verify.hpp"
#include "fractomo/wigner.hpp"

namespace {

using namespace fractomo;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

UniformGrid parse_grid(const std::string& spec) {
    const auto first = spec.find(':');
    const auto second = spec.find(':', first == std::string::npos ? spec.size() : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw ParseError("grid spec '" + spec + "' is not start:step:count");
    }
    const double start = parse_double(spec.substr(0, first), "grid start");
    const double step = parse_double(spec.substr(first + 1, second - first - 1), "grid step");
    const double count = parse_double(spec.substr(second + 1), "grid count");
    if (count < 2 || count != std::floor(count)) {
        throw ParseError("grid count must be an integer >= 2");
    }
    return UniformGrid(start, step, static_cast<std::int64_t>(count));
}

// Partial artifacts are never left behind: write to a scratch name, then
// rename over the target.
class OutputFile {
public:
    explicit OutputFile(std::string path) : path_(std::move(path)), tmp_(path_ + ".tmp") {}
    ~OutputFile() {
        if (!committed_) {
            std::error_code ec;
            std::filesystem::remove(tmp_, ec);
        }
    }
    const std::string& temp_path() const { return tmp_; }
    void commit() {
        std::filesystem::rename(tmp_, path_);
        committed_ = true;
    }

private:
    std::string path_;
    std::string tmp_;
    bool committed_ = false;
};

void write_signal_artifact(const SampledSignal& s, const std::string& path) {
    OutputFile out(path);
    write_signal_file(s, out.temp_path());
    out.commit();
}

struct TolOverrides {
    std::map<std::string, double> values;
};

void parse_tol_override(const std::string& text, TolOverrides& overrides) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ParseError("tol override '" + text + "' is not name=value");
    }
    overrides.values[text.substr(0, eq)] =
        parse_double(text.substr(eq + 1), "tol override");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"fractional Fourier / tomography toolkit for sampled analytic signals"};
    app.require_subcommand(1);

    std::string in_path, out_path, grid_spec, kind = "gaussian", suite = "all";
    std::string method = "auto", report_path;
    std::vector<std::string> tol_specs;
    double order_a = 1.0, time_t = 0.0, mu = 0.0, nu = 1.0;
    std::string mu_grid_spec, x_grid_spec, freq_grid_spec;

    auto* frft_cmd = app.add_subcommand("frft", "apply the fractional Fourier transform");
    frft_cmd->add_option("--a", order_a, "transform order")->required();
    frft_cmd->add_option("--in", in_path, "input signal file")->required();
    frft_cmd->add_option("--out", out_path, "output signal file")->required();
    frft_cmd->add_option("--method", method, "auto | fast | quadrature");

    auto* prop_cmd = app.add_subcommand("propagate", "harmonic-oscillator evolution");
    prop_cmd->add_option("--t", time_t, "propagation time")->required();
    prop_cmd->add_option("--in", in_path)->required();
    prop_cmd->add_option("--out", out_path)->required();

    auto* tomo_cmd = app.add_subcommand("tomogram", "w(X, mu, nu) of a signal");
    tomo_cmd->add_option("--mu", mu)->required();
    tomo_cmd->add_option("--nu", nu)->required();
    tomo_cmd->add_option("--in", in_path)->required();
    tomo_cmd->add_option("--out", out_path)->required();
    tomo_cmd->add_option("--grid", grid_spec, "X grid start:step:count (default: suggested)");
    tomo_cmd->add_option("--method", method, "auto | direct | frft");

    auto* rec_cmd = app.add_subcommand("reconstruct",
                                       "signal from its tomograms, up to a global phase");
    rec_cmd->add_option("--in", in_path)->required();
    rec_cmd->add_option("--out", out_path)->required();
    rec_cmd->add_option("--mu-grid", mu_grid_spec, "mu window start:step:count");
    rec_cmd->add_option("--x-grid", x_grid_spec, "X window start:step:count");
    rec_cmd->add_option("--method", method, "auto | direct | frft tomogram provider");

    auto* wig_cmd = app.add_subcommand("wigner", "time-frequency quasidistribution");
    wig_cmd->add_option("--in", in_path)->required();
    wig_cmd->add_option("--out", out_path, "output prefix (.pgm and .csv)")->required();
    wig_cmd->add_option("--freq-grid", freq_grid_spec, "frequency grid start:step:count");

    auto* gen_cmd = app.add_subcommand("generate", "write a bundled test signal");
    gen_cmd->add_option("--kind", kind, "gaussian | shifted-gaussian | two-gaussian | chirp");
    gen_cmd->add_option("--grid", grid_spec, "grid start:step:count (default -8:1/64:1024)");
    gen_cmd->add_option("--out", out_path)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    verify_cmd->add_option("--suite", suite,
                           "all | smoke | signal | frft | oscillator | tomography | "
                           "reconstruction | wigner");
    verify_cmd->add_option("--out", report_path, "report CSV path (default stdout)");
    verify_cmd->add_option("--tol-override", tol_specs, "name=value, repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message / help text
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (frft_cmd->parsed()) {
        const SampledSignal s = read_signal_file(in_path);
        const FrftOrder order = reduce_order(order_a);
        SampledSignal out = (method == "quadrature") ? apply_frft(s, order)
                                                     : apply_frft_fast(s, order);
        write_signal_artifact(out, out_path);
        std::cout << "frft a=" << format_double(order.a)
                  << " norm_in=" << format_double(l2_norm(s))
                  << " norm_out=" << format_double(l2_norm(out)) << "\n";
        return kExitOk;
    }

    if (prop_cmd->parsed()) {
        const SampledSignal s = read_signal_file(in_path);
        const SampledSignal out = propagate(OscillatorConfig{}, s, PropagationTime{time_t});
        write_signal_artifact(out, out_path);
        std::cout << "propagate t=" << format_double(time_t)
                  << " norm_out=" << format_double(l2_norm(out)) << "\n";
        return kExitOk;
    }

    if (tomo_cmd->parsed()) {
        const SampledSignal s = read_signal_file(in_path);
        const TomographyParams p{mu, nu};
        const UniformGrid xg =
            grid_spec.empty() ? suggest_x_grid(s, p) : parse_grid(grid_spec);
        Tomogram t = (method == "frft")
                         ? tomogram_via_frft(s, p, xg)
                         : (method == "direct" ? tomogram(s, p, xg)
                                               : (std::abs(nu) >= 1e-6
                                                      ? tomogram(s, p, xg)
                                                      : tomogram_via_frft(s, p, xg)));
        OutputFile out(out_path);
        write_tomogram_file(t, out.temp_path());
        out.commit();
        std::cout << "tomogram mu=" << format_double(mu) << " nu=" << format_double(nu)
                  << " mass=" << format_double(t.total_mass()) << "\n";
        return kExitOk;
    }

    if (rec_cmd->parsed()) {
        const SampledSignal s = read_signal_file(in_path);
        const UniformGrid mu_grid =
            mu_grid_spec.empty() ? default_mu_grid() : parse_grid(mu_grid_spec);
        const UniformGrid x_grid =
            x_grid_spec.empty() ? default_recon_x_grid() : parse_grid(x_grid_spec);
        const TomogramProvider provider =
            (method == "direct") ? make_direct_provider(s) : make_frft_provider(s);
        const CorrelationMatrix corr =
            reconstruct_correlation(provider, s.grid, mu_grid, x_grid);
        const SampledSignal rec = reconstruct_signal(corr);
        write_signal_artifact(rec, out_path);
        std::cout << "reconstruct fidelity_vs_input=" << format_double(fidelity(rec, s))
                  << "\n";
        return kExitOk;
    }

    if (wig_cmd->parsed()) {
        const SampledSignal s = read_signal_file(in_path);
        const UniformGrid fg = freq_grid_spec.empty() ? default_freq_grid(s.grid)
                                                      : parse_grid(freq_grid_spec);
        const WignerMap wm = wigner_map(s, fg);
        {
            OutputFile pgm(out_path + ".pgm");
            std::ofstream f(pgm.temp_path());
            if (!f) throw ParseError("cannot open '" + out_path + ".pgm'");
            write_pgm(wm, f);
            if (!f.good()) throw ParseError("write failed for '" + out_path + ".pgm'");
            f.close();
            pgm.commit();
        }
        {
            OutputFile csv(out_path + ".csv");
            std::ofstream f(csv.temp_path());
            if (!f) throw ParseError("cannot open '" + out_path + ".csv'");
            write_wigner_grid(wm, f);
            if (!f.good()) throw ParseError("write failed for '" + out_path + ".csv'");
            f.close();
            csv.commit();
        }
        std::cout << "wigner " << wm.u_grid.count << "x" << wm.freq_grid.count
                  << " map written\n";
        return kExitOk;
    }

    if (gen_cmd->parsed()) {
        const UniformGrid grid =
            grid_spec.empty() ? default_signal_grid() : parse_grid(grid_spec);
        const SampledSignal s = generate_test_signal(parse_signal_kind(kind), grid);
        write_signal_artifact(s, out_path);
        std::cout << "generate kind=" << kind << " norm=" << format_double(l2_norm(s))
                  << "\n";
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        VerifyOptions options;
        options.suite = suite;
        TolOverrides overrides;
        for (const std::string& spec : tol_specs) parse_tol_override(spec, overrides);
        options.tol_overrides = overrides.values;
        const std::vector<CheckResult> results = run_verification(options);
        if (report_path.empty()) {
            write_report(results, std::cout);
        } else {
            OutputFile out(report_path);
            std::ofstream f(out.temp_path());
            if (!f) throw ParseError("cannot open '" + report_path + "'");
            write_report(results, f);
            if (!f.good()) throw ParseError("write failed for '" + report_path + "'");
            f.close();
            out.commit();
        }
        return all_passed(results) ? kExitOk : kExitVerify;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
