#pragma once

#include <stdexcept>
#include <string>

namespace hwtau {

// Base for every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inconsistent or invalid configuration (mismatched truncations, unsupported family, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Mathematical precondition violated (log of a series without unit constant term, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Requested coefficient lies outside the truncation window.
class OutOfWindowError : public Error {
public:
    using Error::Error;
};

// Enumeration budget or hard size cap exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A weight factor that must be inverted vanishes at the chosen rational parameters.
class SingularParameterError : public Error {
public:
    using Error::Error;
};

}  // namespace hwtau
