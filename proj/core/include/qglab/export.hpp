#pragma once

#include <string>
#include <vector>

#include "qglab/checks.hpp"

namespace qglab {

// All JSON is emitted with sorted keys and shortest round-trip doubles, so
// identical inputs give byte-identical output.

std::string validation_json(const ValidationReport& report);
std::string validation_text(const ValidationReport& report);

// {"group": hash, "coeffs": [[re, im], ...]}
std::string functional_json(const Functional& phi);

// States with their support projection, dim N and Haar-type flag.
std::string enumeration_json(const Enumeration& en, double tol);
std::string enumeration_text(const Enumeration& en, double tol);

// Includes the DOT rendering under "dot".
std::string lattice_json(const IdempotentLattice& lat);
// Node and edge statements only; edge x -> y when y covers x.
std::string lattice_dot(const IdempotentLattice& lat);
std::string lattice_text(const IdempotentLattice& lat);

std::string convention_json(const DualPair& pair);
std::string convention_text(const DualPair& pair);

// Dense complex matrix, row-major, entries [re, im].
std::string matrix_json(const Mat& m);

std::string checks_json(const std::vector<CheckResult>& results);
std::string checks_text(const std::vector<CheckResult>& results);

}  // namespace qglab
