#pragma once

#include <stdexcept>
#include <string>

namespace sskm {

// Thrown when a configuration is empty or holds out-of-range indices.
struct InvalidConfigurationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an operation needs positive total weight and there is none.
struct DegenerateInstanceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when k exceeds the number of usable candidate centers.
struct InfeasibleKError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when the brute-force oracle would enumerate too many subsets.
struct OracleTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / instance validation failures (malformed files, asymmetric matrix, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires point coordinates but the instance only has a matrix.
struct UnsupportedMetricError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace sskm
