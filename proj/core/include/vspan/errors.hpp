#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vspan {

// Syntax error in a Gauss code; `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Structurally ill-formed diagram (label seen once or three times, both
// passages with the same role, contradictory signs, ...).
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation applied outside its domain (unknown crossing, span of the zero
// polynomial, non-alternating input to a coloring, bad insertion point, ...).
class DomainError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured budget was exceeded (crossing limit, sampling attempts).
class ResourceLimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-check that must hold by construction failed.  Indicates a bug, not
// bad input.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace vspan
