#include "perm321/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ordered_parallel.hpp"
#include "perm321/errors.hpp"
#include "perm321/patterns.hpp"

namespace perm321 {
namespace {

const Value kPattern321[] = {3, 2, 1};

void check_length(int n, int cap) {
    if (n < 0) throw Error(ErrorKind::InvalidRange, "length must be non-negative, got " + std::to_string(n));
    if (n > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "length " + std::to_string(n) + " exceeds oracle cap " + std::to_string(cap));
    }
}

// Visits, in lexicographic order, every n-permutation whose first value is
// first (1-based). n = 0 is handled by callers.
template <class Visit>
void for_each_with_first(int n, Value first, Visit&& visit) {
    std::vector<Value> perm(static_cast<std::size_t>(n));
    perm[0] = first;
    std::iota(perm.begin() + 1, perm.begin() + first, 1);
    std::iota(perm.begin() + first, perm.end(), first + 1);
    do {
        visit(std::span<const Value>(perm));
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

// Partitions the n! permutations by first value and combines per-partition
// results in order.
template <class Result>
void partitioned(int n, const OracleOptions& options, const std::function<Result(Value)>& work,
                 const std::function<void(Result&&)>& combine) {
    const auto tasks = static_cast<std::size_t>(n);
    detail::run_ordered<Result>(
        tasks, options.threads, [&work](std::size_t t) { return work(static_cast<Value>(t + 1)); },
        [&](std::size_t t, Result&& r) {
            combine(std::move(r));
            if (options.on_progress) options.on_progress(t + 1, tasks);
        });
}

}  // namespace

BigInt brute_count_exactly_k(int n, const Permutation& pattern, std::uint64_t k, const OracleOptions& options) {
    check_length(n, options.cap);
    const auto pat = pattern.values();
    const std::uint64_t limit = k == detail::kNoLimit ? k : k + 1;
    if (n == 0) return detail::count_occurrences({}, pat, limit) == k ? 1 : 0;

    BigInt total = 0;
    partitioned<std::uint64_t>(
        n, options,
        [n, pat, k, limit](Value first) {
            std::uint64_t hits = 0;
            for_each_with_first(n, first, [&](std::span<const Value> perm) {
                if (detail::count_occurrences(perm, pat, limit) == k) ++hits;
            });
            return hits;
        },
        [&total](std::uint64_t&& hits) { total += hits; });
    return total;
}

std::map<std::uint64_t, BigInt> brute_count_distribution(int n, const Permutation& pattern,
                                                         const OracleOptions& options) {
    check_length(n, options.cap);
    const auto pat = pattern.values();
    std::map<std::uint64_t, BigInt> out;
    if (n == 0) {
        out[detail::count_occurrences({}, pat)] = 1;
        return out;
    }
    using Histogram = std::map<std::uint64_t, std::uint64_t>;
    partitioned<Histogram>(
        n, options,
        [n, pat](Value first) {
            Histogram h;
            for_each_with_first(n, first,
                                [&](std::span<const Value> perm) { ++h[detail::count_occurrences(perm, pat)]; });
            return h;
        },
        [&out](Histogram&& h) {
            for (const auto& [k, count] : h) out[k] += count;
        });
    return out;
}

void brute_noonan_set(int n, const std::function<void(std::span<const Value>)>& sink,
                      const OracleOptions& options) {
    check_length(n, options.cap);
    if (n < 3) return;
    const auto width = static_cast<std::size_t>(n);
    partitioned<std::vector<Value>>(
        n, options,
        [n](Value first) {
            std::vector<Value> flat;
            for_each_with_first(n, first, [&](std::span<const Value> perm) {
                if (detail::count_occurrences(perm, kPattern321, 2) == 1) {
                    flat.insert(flat.end(), perm.begin(), perm.end());
                }
            });
            return flat;
        },
        [&sink, width](std::vector<Value>&& flat) {
            const std::span<const Value> all(flat);
            for (std::size_t off = 0; off < all.size(); off += width) sink(all.subspan(off, width));
        });
}

std::vector<Permutation> collect_brute_noonan_set(int n, const OracleOptions& options) {
    std::vector<Permutation> out;
    brute_noonan_set(n, [&out](std::span<const Value> p) { out.push_back(Permutation::from_one_line(p)); },
                     options);
    return out;
}

}  // namespace perm321
