#pragma once

#include <stdexcept>
#include <string>

namespace shimorin {

// Bad input: malformed files, violated preconditions. CLI exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Float path lost the conditioning it needs. CLI exit code 3.
struct NumericalBreakdown : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace shimorin
