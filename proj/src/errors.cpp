#include "perm321/errors.hpp"

namespace perm321 {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotAPermutation: return "NotAPermutation";
        case ErrorKind::NoOccurrence: return "NoOccurrence";
        case ErrorKind::MultipleOccurrences: return "MultipleOccurrences";
        case ErrorKind::NoUnique321: return "NoUnique321";
        case ErrorKind::InternalConstraintViolation: return "InternalConstraintViolation";
        case ErrorKind::ConstraintViolation: return "ConstraintViolation";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::InvalidB: return "InvalidB";
        case ErrorKind::InvalidRange: return "InvalidRange";
        case ErrorKind::NonIntegerResult: return "NonIntegerResult";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace perm321
