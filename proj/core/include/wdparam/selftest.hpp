#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wdparam/random_params.hpp"

namespace wdparam {

struct CriterionResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelftestOptions {
    std::uint64_t seed = 20240901;
    /// Instance-count scale in percent (100 = the full suite).
    unsigned scale = 100;
    /// Exhaustive-sweep dimension bound.
    unsigned sweep_max_n = 4;
    unsigned sweep_max_M = 6;
};

/// Runs the acceptance criteria; prints one pass/fail line per criterion to
/// `progress` when given.  Deterministic for a fixed (seed, scale).
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opt,
                                            std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace wdparam
