#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace fractomo {

// One verification check: `pass` is measured <= tolerance for error-style
// checks and measured >= tolerance for fidelity-style ones.
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool higher_is_better = false;
    bool pass = false;
};

struct VerifyOptions {
    // "all", "smoke", or a module name: signal | frft | oscillator |
    // tomography | reconstruction | wigner
    std::string suite = "all";
    std::map<std::string, double> tol_overrides;
};

// Runs the named invariant suite on deterministic bundled signals.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

// Machine-readable report: `name,status,measured,tolerance` CSV rows.
void write_report(const std::vector<CheckResult>& results, std::ostream& out);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fractomo
