#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tkg {

// Base error. `code` is a stable machine-readable tag (e.g. "UnknownCategory"),
// `what()` carries the full human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed input data; carries a 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(std::string code, const std::string& message, std::size_t line = 0)
        : Error(std::move(code),
                line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a corpus/taxonomy constraint.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Precondition violation on an analysis operation.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace tkg
