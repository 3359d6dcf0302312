#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (n < 2, d not a proper divisor, ...).
struct DomainError : Error {
    using Error::Error;
};

// The modulus has no nonzero zero divisors (n prime), so there is no graph.
struct EmptyGraphError : Error {
    using Error::Error;
};

// Explicit materialization refused; callers should use the divisor-class path.
struct TooLargeError : Error {
    using Error::Error;
};

// Eulerian analysis rejects LoopCounts1: the even-degree criterion is
// unsound when a loop contributes 1 to its vertex degree.
struct UnsupportedConventionError : Error {
    using Error::Error;
};

// Consistency failure between two routes that must agree (bug signal).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace zdg
