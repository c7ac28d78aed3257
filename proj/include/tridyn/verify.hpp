#pragma once

// Numerical verification suites: every invariant the library claims is
// re-checked here with measured margins.  Checks that fail on IEEE doubles
// (known float-precision limits, not logic bugs) are reported honestly
// with their measured counts rather than being relaxed.

#include <cstdint>
#include <string>
#include <vector>

namespace tridyn::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed;
    std::string detail;
};

// suite: one of "all", "lemmas", "regions", "quad", "orbits".
// samples scales the randomized checks; grid-based checks are fixed.
std::vector<CheckResult> run_suite(const std::string& suite, int samples,
                                   std::uint64_t seed);

// Human-readable pass/fail table.
std::string format_results(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace tridyn::verify
