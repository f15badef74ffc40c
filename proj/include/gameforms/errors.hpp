#pragma once

#include <stdexcept>
#include <string>

namespace gf {

// Input violates a structural invariant (non-surjective form, bad ownership
// partition, non-positive cost, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure with position info.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Requested enumeration exceeds the configured budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// The lexicographic NE construction produced a non-equilibrium on a tight
// form; signals the construction diverged from the guarantee it relies on.
struct NeGuaranteeViolated : std::runtime_error {
    explicit NeGuaranteeViolated(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gf
