#pragma once

#include <stdexcept>
#include <string>

namespace ffc {

// Error categories map onto CLI exit codes: validation/parameter errors are
// caller mistakes (exit 2), everything else is a runtime failure (exit 1).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data (non-finite values, shape mismatches, bad files).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Out-of-range or inconsistent parameter value.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A documented precondition was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Requested metric is undefined for the given labeling.
class MetricUndefinedError : public Error {
public:
    using Error::Error;
};

}  // namespace ffc
