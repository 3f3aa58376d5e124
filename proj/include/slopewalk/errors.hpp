#pragma once

#include <stdexcept>
#include <string>

namespace slopewalk {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// gcd(a, c) does not divide b: the boundary carries no lattice point.
class NoSolution : public Error {
public:
    using Error::Error;
};

// An exact quantity that must be an integer came out fractional.
class IntegralityError : public Error {
public:
    using Error::Error;
};

// Two routes that must agree exactly did not.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Numeric root finding failed to converge or could not classify roots.
class RootFinderError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition) throw PreconditionError(message);
}

} // namespace detail
} // namespace slopewalk
