#pragma once

#include <string>
#include <vector>

namespace ellgw {

// One failed invariant: which check, plus the inputs and both sides.
struct VerificationFailure {
    std::string check;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    long cases = 0;
    std::vector<VerificationFailure> failures;
    double wall_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

std::vector<std::string> suite_names();

// Runs the named invariant suite (lattice, local, series, taubes, or all)
// at its desk-scale ranges. Randomized suites use a fixed seed, so the
// report is deterministic. Rejects unknown names.
VerificationReport run_suite(const std::string& name);

}  // namespace ellgw
