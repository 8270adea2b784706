#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace perm321 {

using Value = int;

/// A permutation of {1, ..., n} in one-line notation.
///
/// Values and positions are 1-based in the mathematical sense; values() exposes
/// the underlying storage as a 0-indexed span, so values()[i] is the value at
/// position i + 1. The empty permutation (n = 0) is a valid value.
class Permutation {
public:
    Permutation() = default;

    /// Validates that raw is a rearrangement of exactly {1, ..., raw.size()}.
    /// Throws Error(NotAPermutation) on duplicates, gaps or non-positive values.
    static Permutation from_one_line(std::span<const Value> raw);
    static Permutation from_one_line(std::initializer_list<Value> raw);

    /// Parses the space-separated text form ("3 2 1 4").
    static Permutation from_text(std::string_view text);

    static Permutation identity(int n);
    static Permutation reverse_identity(int n);

    std::span<const Value> values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }

    /// Value at 1-based position.
    Value at(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }

    Permutation reversed() const;
    Permutation complemented() const;
    Permutation reverse_complement() const;

    std::string to_text() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<Value> values) : values_(std::move(values)) {}

    std::vector<Value> values_;
};

/// A sequence of distinct positive integers over an arbitrary value set.
/// Pattern questions about it are answered on the relative order of its values.
class ValueSequence {
public:
    ValueSequence() = default;

    /// Throws Error(NotAPermutation) on duplicate or non-positive values.
    static ValueSequence from_values(std::span<const Value> raw);
    static ValueSequence from_values(std::initializer_list<Value> raw);
    static ValueSequence from_text(std::string_view text);

    std::span<const Value> values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }

    Value front() const { return values_.front(); }
    Value back() const { return values_.back(); }

    /// True iff the support is exactly the contiguous range {lo, ..., hi}.
    bool has_support(Value lo, Value hi) const noexcept;

    std::string to_text() const;

    friend bool operator==(const ValueSequence&, const ValueSequence&) = default;
    friend auto operator<=>(const ValueSequence&, const ValueSequence&) = default;

private:
    explicit ValueSequence(std::vector<Value> values) : values_(std::move(values)) {}

    std::vector<Value> values_;
};

/// A 321 occurrence: positions i < j < k (1-based) holding values c > b > a.
struct Occurrence321 {
    std::array<int, 3> positions{};
    Value c = 0;
    Value b = 0;
    Value a = 0;

    friend bool operator==(const Occurrence321&, const Occurrence321&) = default;
};

/// Parses whitespace-separated integers. Throws Error(ParseError) on any
/// token that is not a base-10 integer fitting in Value.
std::vector<Value> parse_integers(std::string_view text);

/// Space-separated one-line text, no trailing newline. Empty input gives "".
std::string format_one_line(std::span<const Value> values);

std::ostream& operator<<(std::ostream& os, const Permutation& perm);
std::ostream& operator<<(std::ostream& os, const ValueSequence& seq);

}  // namespace perm321
