#pragma once

#include <stdexcept>
#include <string>

namespace cdp {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument or violated operation precondition.
class InputError : public Error {
public:
    using Error::Error;
};

// Malformed instance text. Lines are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// The input graph lacks the structure an algorithm needs
// (disconnected where connectivity is required, no vertex cut, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

// Complete graphs have no node separator; the packing pipeline rejects them.
class CompleteGraphError : public StructuralError {
public:
    using StructuralError::StructuralError;
};

// A configured iteration or enumeration budget was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// An exactness invariant failed mid-computation; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace cdp
