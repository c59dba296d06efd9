#ifndef SEMICOMM_ERROR_HPP
#define SEMICOMM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semicomm {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range indices, bad parameters, bad file contents.
class InputError : public Error {
public:
    using Error::Error;
};

/// A size limit would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An operation was handed a value that does not meet its documented
/// precondition (e.g. a non-associative table where a semigroup is required).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A mathematical hypothesis needed by an operation does not hold; carries
/// the witness in its message.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Never expected; indicates a bug.
class InvariantFailure : public Error {
public:
    using Error::Error;
};

/// Parse failure with 1-based position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace semicomm

#endif
