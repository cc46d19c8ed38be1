#pragma once

#include <stdexcept>
#include <string>

namespace homog {

// Bad caller input (overlapping sets, out-of-range parameters, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed graph / family / certificate text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The request is well-formed but too expensive for the configured budget.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input graph is below the configured minimum order for the pipeline.
struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stage's stated precondition failed at runtime; carries diagnostics.
struct ViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Partition refinement hit k_max with too many bad pairs and too little evidence.
struct ExhaustionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace homog
