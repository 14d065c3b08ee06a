#pragma once

#include <stdexcept>
#include <string>

namespace permav {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input; `position` is the 0-based offset of the offending
/// character (or token) in the input string.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          message_(msg),
          position_(position) {}

    const std::string& message() const { return message_; }
    std::size_t position() const { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

/// A precondition on an operation's arguments was violated.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// A resource guard (state count, slot count, enumeration length) tripped.
class GuardError : public Error {
public:
    GuardError(const std::string& guard, const std::string& msg)
        : Error(msg), guard_(guard) {}

    const std::string& guard() const { return guard_; }

private:
    std::string guard_;
};

}  // namespace permav
