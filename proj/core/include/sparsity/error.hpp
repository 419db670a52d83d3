#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparsity {

// Malformed textual input. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Structurally invalid data (self-loops, out-of-range ids, inconsistent witnesses).
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exact routine refused an instance above its configured size limit.
class SizeLimitError : public std::runtime_error {
public:
    SizeLimitError(const std::string& operation, std::size_t size, std::size_t limit)
        : std::runtime_error(operation + ": instance size " + std::to_string(size) +
                             " exceeds exact limit " + std::to_string(limit)),
          size_(size), limit_(limit) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t size_;
    std::size_t limit_;
};

// A search ran out of its work budget before reaching a definite answer.
class BudgetExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed object failed its own post-hoc verification.
class VerificationFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline void require_size(const char* operation, std::size_t size, std::size_t limit) {
    if (size > limit) throw SizeLimitError(operation, size, limit);
}

}  // namespace sparsity
