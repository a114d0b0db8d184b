#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace golay486 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of mismatched length or degree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Arguments that violate an operation's precondition.
class InputError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `position()` is the byte offset of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A graph or action lacks the structure an operation requires
/// (disconnected, non-bipartite, intransitive, ...).
class StructureError : public Error {
public:
    using Error::Error;
};

/// A configured size bound would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Computed data does not match any expected reference.
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace golay486
