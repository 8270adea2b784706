#include "perm321/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <unordered_set>

#include "perm321/errors.hpp"

namespace perm321 {

Permutation Permutation::from_one_line(std::span<const Value> raw) {
    const auto n = raw.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const Value v = raw[pos];
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw Error(ErrorKind::NotAPermutation,
                        "value " + std::to_string(v) + " at position " + std::to_string(pos + 1) +
                            " is outside 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw Error(ErrorKind::NotAPermutation, "duplicate value " + std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return Permutation(std::vector<Value>(raw.begin(), raw.end()));
}

Permutation Permutation::from_one_line(std::initializer_list<Value> raw) {
    return from_one_line(std::span<const Value>(raw.begin(), raw.size()));
}

Permutation Permutation::from_text(std::string_view text) {
    const auto values = parse_integers(text);
    return from_one_line(values);
}

Permutation Permutation::identity(int n) {
    std::vector<Value> values(static_cast<std::size_t>(std::max(n, 0)));
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<Value>(i + 1);
    return Permutation(std::move(values));
}

Permutation Permutation::reverse_identity(int n) {
    auto values = identity(n).values_;
    std::reverse(values.begin(), values.end());
    return Permutation(std::move(values));
}

Permutation Permutation::reversed() const {
    return Permutation(std::vector<Value>(values_.rbegin(), values_.rend()));
}

Permutation Permutation::complemented() const {
    std::vector<Value> out(values_.size());
    const auto top = static_cast<Value>(values_.size()) + 1;
    std::transform(values_.begin(), values_.end(), out.begin(), [top](Value v) { return top - v; });
    return Permutation(std::move(out));
}

Permutation Permutation::reverse_complement() const { return reversed().complemented(); }

std::string Permutation::to_text() const { return format_one_line(values_); }

ValueSequence ValueSequence::from_values(std::span<const Value> raw) {
    std::unordered_set<Value> seen;
    seen.reserve(raw.size());
    for (const Value v : raw) {
        if (v < 1) {
            throw Error(ErrorKind::NotAPermutation, "non-positive value " + std::to_string(v));
        }
        if (!seen.insert(v).second) {
            throw Error(ErrorKind::NotAPermutation, "duplicate value " + std::to_string(v));
        }
    }
    return ValueSequence(std::vector<Value>(raw.begin(), raw.end()));
}

ValueSequence ValueSequence::from_values(std::initializer_list<Value> raw) {
    return from_values(std::span<const Value>(raw.begin(), raw.size()));
}

ValueSequence ValueSequence::from_text(std::string_view text) {
    const auto values = parse_integers(text);
    return from_values(values);
}

bool ValueSequence::has_support(Value lo, Value hi) const noexcept {
    if (hi < lo) return values_.empty();
    if (static_cast<long long>(hi) - lo + 1 != static_cast<long long>(values_.size())) return false;
    // Values are distinct, so size match plus containment pins the support.
    return std::all_of(values_.begin(), values_.end(),
                       [lo, hi](Value v) { return v >= lo && v <= hi; });
}

std::string ValueSequence::to_text() const { return format_one_line(values_); }

std::vector<Value> parse_integers(std::string_view text) {
    std::vector<Value> out;
    std::size_t pos = 0;
    const auto is_space = [](char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
    };
    while (pos < text.size()) {
        while (pos < text.size() && is_space(text[pos])) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_space(text[end])) ++end;
        const auto token = text.substr(pos, end - pos);
        const char* first = token.data();
        Value v = 0;
        const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size() || first == ptr) {
            throw Error(ErrorKind::ParseError, "malformed integer '" + std::string(token) + "'");
        }
        out.push_back(v);
        pos = end;
    }
    return out;
}

std::string format_one_line(std::span<const Value> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out.push_back(' ');
        out += std::to_string(values[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& perm) { return os << perm.to_text(); }

std::ostream& operator<<(std::ostream& os, const ValueSequence& seq) { return os << seq.to_text(); }

}  // namespace perm321
