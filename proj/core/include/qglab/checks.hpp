#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qglab/duality.hpp"

namespace qglab {

struct CheckResult {
    std::string key;
    bool pass = false;
    double residual = 0.0;  // worst residual seen, 0 when the check is boolean
    std::string detail;
    bool internal = false;  // failure raised an internal-consistency error
};

struct CheckOptions {
    Tolerances tol;
    Strategy strategy = Strategy::Auto;
    std::uint64_t seed = default_seed;
};

// The full invariant suite on one quantum group. Never throws on a failed
// invariant; each failure is recorded in its result.
std::vector<CheckResult> run_checks(const QuantumGroupPtr& g, const CheckOptions& opts);

}  // namespace qglab
