#pragma once

#include <stdexcept>
#include <string>

namespace wsnga {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violated an operation's precondition or a type invariant.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A chromosome selects no alive cluster head and cannot be decoded.
class DegenerateChromosome : public Error {
public:
    using Error::Error;
};

/// Run configuration could not be parsed or failed validation.
class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

namespace detail {
inline void require(bool condition, const std::string& message) {
    if (!condition) throw InvalidArgument(message);
}
}  // namespace detail

}  // namespace wsnga
