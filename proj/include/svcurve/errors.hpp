#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svcurve {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated caller contract (bad input, unmet hypothesis). CLI exit code 2.
struct precondition_error : error {
    using error::error;
};

// Requested computation exceeds the configured scan budget; the library
// refuses instead of truncating silently. CLI exit code 3.
struct budget_error : error {
    using error::error;
};

// Input is valid but outside the supported theory (non-ordinary
// singularities, Hasse orders >= p, ...). CLI exit code 2.
struct unsupported_error : error {
    using error::error;
};

// A truncated power series ran out of known coefficients before the
// requested valuation could be decided.
struct precision_error : error {
    using error::error;
};

// Text parsing failure; carries the byte offset of the offending token.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

}  // namespace svcurve
