#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sqexc::cli {

enum class Suite { identities, oracle, all };

struct PropertyResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    int cases = 0;
    bool passed = true;
};

struct ValidationReport {
    std::vector<PropertyResult> properties;
    bool passed() const;
};

/// Runs the identity and/or oracle-equivalence checks on seeded random
/// parameters.  With inject_fault the closed-form covariance is negated
/// before comparison, which the oracle suite must catch.
ValidationReport run_validation(Suite suite, std::uint64_t seed, bool inject_fault = false);

}  // namespace sqexc::cli
