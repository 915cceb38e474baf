#pragma once

#include <stdexcept>
#include <string>

namespace grk {

// Malformed input: parse failures, shape mismatches, invalid arguments.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap would be exceeded.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace grk
