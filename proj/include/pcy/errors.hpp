#ifndef PCY_ERRORS_HPP
#define PCY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcy {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (polynomial expressions, problem files).
// Carries the byte offset of the first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

// Violated precondition or failed validation (ring mismatch, division by
// zero, decomposition residual, non-proportional normal forms, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A computation was refused because it would exceed a configured size
// limit. Raised instead of thrashing; the message reports the requirement.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace pcy

#endif
