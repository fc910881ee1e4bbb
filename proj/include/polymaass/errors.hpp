#pragma once

#include <stdexcept>
#include <string>

namespace polymaass {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ParameterBoxError : Error { using Error::Error; };
struct AccuracyError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct TailError : Error { using Error::Error; };
struct ReductionError : Error { using Error::Error; };
struct IterationError : Error { using Error::Error; };
struct WeightError : Error { using Error::Error; };
struct AliasError : Error { using Error::Error; };
struct TableMismatchError : Error { using Error::Error; };
struct BoundaryLengthError : Error { using Error::Error; };
struct UnknownIdentityError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct ConsistencyError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace polymaass
