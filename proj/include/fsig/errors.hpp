#pragma once

#include <stdexcept>
#include <string>

namespace fsig {

// Violated mathematical precondition (non-ample class, unbounded polytope,
// exceeded scan budget, failed hypothesis...).  The CLI maps these to exit 1.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user input (bad rational, unknown variety, wrong coefficient
// count...).  The CLI maps these to exit 2.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace fsig
