#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace perm321 {

enum class ErrorKind {
    NotAPermutation,
    NoOccurrence,
    MultipleOccurrences,
    NoUnique321,
    InternalConstraintViolation,
    ConstraintViolation,
    CapExceeded,
    InvalidB,
    InvalidRange,
    NonIntegerResult,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Domain failure raised by every module. what() carries the detail message;
// kind() names the failure the way the CLI reports it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return to_string(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace perm321
