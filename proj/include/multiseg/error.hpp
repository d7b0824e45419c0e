#pragma once

#include <stdexcept>
#include <string>

namespace mseg {

/// Input violates an operation's precondition (non-linked pair, b not below a, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration would exceed its configured size cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A postcondition that the theory guarantees did not hold. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Malformed external input (JSON, permutation strings).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InvariantViolation(what);
}

}  // namespace detail
}  // namespace mseg
