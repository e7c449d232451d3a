#pragma once

#include <stdexcept>
#include <string>

namespace crashcast {

// Bad input data: unreadable files, malformed rows, empty slices.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed record text; carries the 1-based line number of the offending row.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& msg)
        : DataError("line " + std::to_string(line) + ": " + msg), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace crashcast
