// Cross-module invariant battery run by the `verify` subcommand: exact
// identities between the enumerator and the lattice sums, maximizer and
// curvature checks, concavity and inequality lemmas, growth bands.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gls/fibred_system.hpp"

namespace gls {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// System-independent randomized inequality checks.
CheckResult cauchy_schwarz_check(std::uint64_t samples, std::uint64_t seed);
CheckResult gamma_ratio_check(std::uint64_t samples, std::uint64_t seed);

std::vector<CheckResult> run_verification(const DigitSystem& sys, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gls
