#pragma once

#include <stdexcept>
#include <string>

namespace iet {

/// Two scalars with distinct irrational radicands met in one operation.
class FieldMismatchError : public std::runtime_error {
public:
    explicit FieldMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input; the message names the offending token or line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation exceeded a configured resource bound.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace iet
