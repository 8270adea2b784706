#include "perm321/patterns.hpp"

#include <vector>

#include "perm321/errors.hpp"

namespace perm321 {
namespace {

// Counts of marked values, 1-indexed over [1, n].
class FenwickTree {
public:
    explicit FenwickTree(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t index) {
        for (; index < tree_.size(); index += index & (~index + 1)) ++tree_[index];
    }

    // Number of marked values in [1, index].
    std::uint64_t prefix(std::size_t index) const {
        std::uint64_t sum = 0;
        for (; index > 0; index -= index & (~index + 1)) sum += tree_[index];
        return sum;
    }

private:
    std::vector<std::uint64_t> tree_;
};

class OccurrenceCounter {
public:
    OccurrenceCounter(std::span<const Value> text, std::span<const Value> pattern, std::uint64_t limit)
        : text_(text), pattern_(pattern), chosen_(pattern.size()), limit_(limit) {}

    std::uint64_t run() {
        extend(0, 0);
        return count_;
    }

private:
    // Returns false once the limit has been reached.
    bool extend(std::size_t depth, std::size_t start) {
        const std::size_t k = pattern_.size();
        const std::size_t last_start = text_.size() - (k - depth);
        for (std::size_t pos = start; pos <= last_start; ++pos) {
            const Value v = text_[pos];
            if (!consistent(depth, v)) continue;
            if (depth + 1 == k) {
                if (++count_ >= limit_) return false;
            } else {
                chosen_[depth] = v;
                if (!extend(depth + 1, pos + 1)) return false;
            }
        }
        return true;
    }

    bool consistent(std::size_t depth, Value v) const {
        const Value target = pattern_[depth];
        for (std::size_t e = 0; e < depth; ++e) {
            if ((v < chosen_[e]) != (target < pattern_[e])) return false;
        }
        return true;
    }

    std::span<const Value> text_;
    std::span<const Value> pattern_;
    std::vector<Value> chosen_;
    std::uint64_t limit_;
    std::uint64_t count_ = 0;
};

}  // namespace

namespace detail {

std::uint64_t count_occurrences(std::span<const Value> text, std::span<const Value> pattern,
                                std::uint64_t limit) {
    if (limit == 0) return 0;
    if (pattern.empty()) return 1;
    if (pattern.size() > text.size()) return 0;
    return OccurrenceCounter(text, pattern, limit).run();
}

std::uint64_t count_321_middle(std::span<const Value> values) {
    const std::size_t n = values.size();
    std::uint64_t total = 0;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const Value mid = values[j];
        std::uint64_t left_greater = 0;
        for (std::size_t i = 0; i < j; ++i) left_greater += values[i] > mid ? 1 : 0;
        if (left_greater == 0) continue;
        std::uint64_t right_smaller = 0;
        for (std::size_t k = j + 1; k < n; ++k) right_smaller += values[k] < mid ? 1 : 0;
        total += left_greater * right_smaller;
    }
    return total;
}

}  // namespace detail

BigInt count_pattern(const Permutation& perm, const Permutation& pattern) {
    return BigInt(detail::count_occurrences(perm.values(), pattern.values()));
}

BigInt count_321(const Permutation& perm) { return BigInt(detail::count_321_middle(perm.values())); }

BigInt count_321_fenwick(const Permutation& perm) {
    const auto values = perm.values();
    FenwickTree seen(values.size());
    BigInt total = 0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        const auto v = static_cast<std::size_t>(values[j]);
        const std::uint64_t left_smaller = seen.prefix(v - 1);
        const std::uint64_t left_greater = j - left_smaller;
        // Every smaller value not yet seen lies to the right.
        const std::uint64_t right_smaller = (v - 1) - left_smaller;
        total += BigInt(left_greater) * right_smaller;
        seen.add(v);
    }
    return total;
}

Occurrence321 find_unique_321(const Permutation& perm) {
    const auto values = perm.values();
    const std::size_t n = values.size();
    Occurrence321 found;
    bool have_one = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (values[i] <= values[j]) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (values[j] <= values[k]) continue;
                if (have_one) {
                    throw Error(ErrorKind::MultipleOccurrences,
                                "permutation " + perm.to_text() + " contains more than one 321 pattern");
                }
                have_one = true;
                found.positions = {static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1)};
                found.c = values[i];
                found.b = values[j];
                found.a = values[k];
            }
        }
    }
    if (!have_one) {
        throw Error(ErrorKind::NoOccurrence, "permutation " + perm.to_text() + " avoids 321");
    }
    return found;
}

}  // namespace perm321
