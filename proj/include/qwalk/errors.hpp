#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Invalid sizes, bond pairs, malformed input.
struct invalid_argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Eigensolver failed to converge within the sweep cap.
struct solver_convergence_error : std::runtime_error {
    double worst_residual;
    explicit solver_convergence_error(const std::string& msg, double resid)
        : std::runtime_error(msg), worst_residual(resid) {}
};

// Fixed-width integer arithmetic overflowed in the exact fingerprint.
struct fingerprint_overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Work estimate exceeds the configured cap (census, witness search).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Most-degenerate eigenvalue is not unique.
struct ambiguity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk
