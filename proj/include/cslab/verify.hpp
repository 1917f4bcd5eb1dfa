#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cslab {

struct SuiteReport {
    std::string name;
    bool passed = true;
    int checks = 0;
    /// Minimal reproducers for the failing checks.
    std::vector<std::string> failures;
};

/// route-equivalence, triple-deletion, specialization, path-closed-form, srht-inverse-kostka, screener-soundness.
const std::vector<std::string>& suite_names();

/// Runs one property suite. `count` is the number of random instances (0 keeps the suite default).
/// Throws BadSpec for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 0, int count = 0);

}  // namespace cslab
