#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wlp {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;  ///< measured quantities, fixed formatting
};

/// Suite names accepted by run_verify besides "all".
std::vector<std::string> verify_suites();

/// Runs the invariant checks of one suite (or "all"). Random inputs are drawn
/// from `seed`; results are deterministic for a given seed. A check that
/// throws is reported as failed with the error message as detail.
std::vector<CheckResult> run_verify(const std::string& suite, std::uint64_t seed, unsigned jobs);

} // namespace wlp
