#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genmat {

// Malformed expression text; `position` is a byte offset into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// An operation was called outside its contract: dimension mismatch, wrong
// arity, a tuple that does not generate where generation is required, ...
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured expansion or substitution ceiling was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A consistency check that cannot fail on valid inputs failed anyway.
// Signals a bug in this library, not bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace genmat
