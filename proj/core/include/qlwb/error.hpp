#pragma once

#include <stdexcept>
#include <string>

namespace qlwb {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad file contents, invalid structures, failed preconditions on data.
class InputError : public Error
{
public:
    using Error::Error;
};

/// Text input that failed to parse. Line and column are 1-based; 0 means unknown.
class ParseError : public InputError
{
public:
    ParseError(const std::string & message, int line, int column = 0);

    auto line() const -> int { return _line; }
    auto column() const -> int { return _column; }

private:
    int _line;
    int _column;
};

/// A configured resource cap (element count, search budget, time) was exceeded.
class ResourceError : public Error
{
public:
    using Error::Error;
};

/// An operation was asked for something its preconditions rule out (for instance
/// blocks of a non-orthomodular structure).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

}
