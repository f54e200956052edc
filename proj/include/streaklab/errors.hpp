#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace streaklab {

// Base for all library failures; the CLI maps these to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data; carries the 1-based line number of the offending row.
struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& reason)
        : Error("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}
    std::size_t line;
};

// Invalid study/generator configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Argument outside an operation's domain.
struct DomainError : Error {
    using Error::Error;
};

// Two inputs that must cover the same length range do not.
struct CoverageError : Error {
    using Error::Error;
};

}  // namespace streaklab
