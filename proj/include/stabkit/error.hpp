#pragma once

#include <stdexcept>
#include <string>

namespace stabkit {

// Malformed external input (edge lists, JSON). Line is 0 when unknown.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A result failed its own verification; always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace stabkit
