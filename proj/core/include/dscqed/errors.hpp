#pragma once

#include <stdexcept>
#include <string>

namespace dscqed {

/// Bad user input: malformed config, out-of-range index, invalid state spec.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numeric failure during a simulation (non-finite data, blow-up, ...).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The retained Fock space is too small for the dynamics it has to carry.
struct TruncationError : NumericError {
    TruncationError(const std::string& what, double time, int n_max)
        : NumericError(what), time(time), n_max(n_max) {}
    double time;
    int n_max;
};

/// Step refinement changed recorded observables beyond the accepted tolerance.
struct ConvergenceError : NumericError {
    using NumericError::NumericError;
};

}  // namespace dscqed
