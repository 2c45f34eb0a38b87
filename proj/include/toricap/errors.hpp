#pragma once

#include <stdexcept>
#include <string>

namespace toricap {

// Bad arguments or malformed input data: the caller's fault.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The mathematics could not be decided within the configured limits, or an
// internal consistency gate failed.  Never raised for bad input.
struct ComputeError : std::runtime_error {
    explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toricap
