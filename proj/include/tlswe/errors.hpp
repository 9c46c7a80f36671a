#pragma once

#include <stdexcept>
#include <string>

namespace tlswe {

/// Iterative solver failed (Newton non-convergence, singular Jacobian, ...).
/// The message carries the location context (cell, interface, path node).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration (bad case name, mismatched domains, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tlswe
