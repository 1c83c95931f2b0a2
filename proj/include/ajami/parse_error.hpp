#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ajami {

/// Raised by the table and profile loaders. `line` is 1-based; 0 means the
/// error is not tied to a specific line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                                  : message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace ajami
