// End-to-end tests of the command line binary; the path comes from CMake.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fractomo/signal_io.hpp"
#include "fractomo/test_signals.hpp"

using namespace fractomo;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("fractomo_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = std::string(FRACTOMO_CLI_PATH) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("generate writes a normalized signal that reads back exactly") {
    TempDir dir;
    const std::string sig = dir.file("g.sig");
    REQUIRE(run("generate --kind gaussian --grid -8:0.015625:1024 --out " + sig) == 0);
    const SampledSignal s = read_signal_file(sig);
    CHECK(s.grid.count == 1024);
    CHECK(std::abs(l2_norm(s) - 1.0) <= 1e-9);

    const SampledSignal expected = generate_test_signal(
        TestSignalKind::gaussian, UniformGrid(-8.0, 0.015625, 1024));
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        // 17-significant-digit round trip: bit-exact
        CHECK(s.values[i] == expected.values[i]);
    }
}

TEST_CASE("frft --a 1 preserves the norm; --a 0 is byte-identical") {
    TempDir dir;
    const std::string sig = dir.file("g.sig");
    REQUIRE(run("generate --kind gaussian --out " + sig) == 0);

    const std::string out1 = dir.file("g1.sig");
    REQUIRE(run("frft --a 1 --in " + sig + " --out " + out1) == 0);
    const SampledSignal in_sig = read_signal_file(sig);
    const SampledSignal out_sig = read_signal_file(out1);
    CHECK(std::abs(l2_norm(out_sig) - l2_norm(in_sig)) <= 1e-6);

    const std::string out0 = dir.file("g0.sig");
    REQUIRE(run("frft --a 0 --in " + sig + " --out " + out0) == 0);
    CHECK(slurp(out0) == slurp(sig));
}

TEST_CASE("identical invocations produce byte-identical artifacts") {
    TempDir dir;
    const std::string sig = dir.file("c.sig");
    REQUIRE(run("generate --kind chirp --grid -4:0.03125:256 --out " + sig) == 0);
    const std::string a = dir.file("a.sig");
    const std::string b = dir.file("b.sig");
    REQUIRE(run("frft --a 0.7 --in " + sig + " --out " + a) == 0);
    REQUIRE(run("frft --a 0.7 --in " + sig + " --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));

    const std::string t1 = dir.file("t1.tom");
    const std::string t2 = dir.file("t2.tom");
    REQUIRE(run("tomogram --mu 0.5 --nu 0.8 --in " + sig + " --out " + t1) == 0);
    REQUIRE(run("tomogram --mu 0.5 --nu 0.8 --in " + sig + " --out " + t2) == 0);
    CHECK(slurp(t1) == slurp(t2));
    CHECK(!slurp(t1).empty());
}

TEST_CASE("propagate and wigner emit artifacts") {
    TempDir dir;
    // wide window: the generator Gaussian is squeezed relative to the
    // oscillator, so its momentum spread needs room at intermediate times
    const std::string sig = dir.file("g.sig");
    REQUIRE(run("generate --kind shifted-gaussian --grid -12:0.03125:768 --out " + sig) ==
            0);

    const std::string prop = dir.file("p.sig");
    REQUIRE(run("propagate --t 0.9 --in " + sig + " --out " + prop) == 0);
    const SampledSignal evolved = read_signal_file(prop);
    CHECK(std::abs(l2_norm(evolved) - 1.0) <= 1e-6);

    const std::string small = dir.file("s.sig");
    REQUIRE(run("generate --kind two-gaussian --grid -4:0.0625:128 --out " + small) == 0);
    const std::string wig = dir.file("w");
    REQUIRE(run("wigner --in " + small + " --out " + wig) == 0);
    CHECK(fs::exists(wig + ".pgm"));
    CHECK(fs::exists(wig + ".csv"));
    CHECK(slurp(wig + ".pgm").substr(0, 2) == "P2");
}

TEST_CASE("reconstruct recovers the input up to a global phase") {
    TempDir dir;
    const std::string sig = dir.file("g.sig");
    REQUIRE(run("generate --kind gaussian --grid -8:0.0625:256 --out " + sig) == 0);
    const std::string rec = dir.file("rec.sig");
    REQUIRE(run("reconstruct --in " + sig + " --out " + rec +
                " --mu-grid -16:0.1:321 --x-grid -30:0.05:1201") == 0);
    const SampledSignal original = read_signal_file(sig);
    const SampledSignal recovered = read_signal_file(rec);
    const double n = l2_norm(original);
    CHECK(std::abs(inner_product(recovered, original)) / (n * n) >= 0.99);
}

TEST_CASE("verify writes a machine-readable report and exits 0") {
    TempDir dir;
    const std::string report = dir.file("report.csv");
    REQUIRE(run("verify --suite smoke --out " + report) == 0);
    std::ifstream in(report);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "name,status,measured,tolerance");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find(",pass,") != std::string::npos);
    }
    CHECK(rows >= 4);
}

TEST_CASE("tol overrides can force a failure, exit 4") {
    TempDir dir;
    const std::string report = dir.file("report.csv");
    CHECK(run("verify --suite smoke --tol-override tomography.gaussian_peak=1e-30 --out " +
              report) == 4);
    std::ifstream in(report);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(text.find("tomography.gaussian_peak,fail") != std::string::npos);
}

TEST_CASE("exit codes: 2 for parse trouble, 3 for domain errors") {
    TempDir dir;
    CHECK(run("frft --a 1 --in " + dir.file("missing.sig") + " --out " +
              dir.file("o.sig")) == 2);
    CHECK(run("nonsense-subcommand") == 2);
    CHECK(run("generate --kind pulse --out " + dir.file("p.sig")) == 2);

    const std::string sig = dir.file("g.sig");
    REQUIRE(run("generate --kind gaussian --grid -4:0.0625:128 --out " + sig) == 0);
    CHECK(run("tomogram --mu 1 --nu 0 --method direct --in " + sig + " --out " +
              dir.file("t.tom")) == 3);

    // failed runs must not leave partial artifacts behind
    CHECK_FALSE(fs::exists(dir.file("t.tom")));
    CHECK_FALSE(fs::exists(dir.file("o.sig")));
}
