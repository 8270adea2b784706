#pragma once

#include <cstdint>
#include <limits>
#include <span>

#include "perm321/bigint.hpp"
#include "perm321/permutation.hpp"

namespace perm321 {

/// Number of occurrences of pattern in perm: increasing position subsequences
/// whose values are order-isomorphic to pattern. The empty pattern occurs
/// exactly once; a pattern longer than perm occurs zero times.
BigInt count_pattern(const Permutation& perm, const Permutation& pattern);

/// Counts 321 occurrences as the sum over middle positions j of
/// (#i<j with perm_i > perm_j) * (#k>j with perm_k < perm_j). O(n^2).
BigInt count_321(const Permutation& perm);

/// Same count via a Fenwick-tree prefix accumulator. O(n log n).
BigInt count_321_fenwick(const Permutation& perm);

/// Returns the unique 321 occurrence of perm. Throws Error(NoOccurrence) when
/// there is none and Error(MultipleOccurrences) as soon as a second one is found.
Occurrence321 find_unique_321(const Permutation& perm);

namespace detail {

inline constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

// Depth-first extension of increasing position subsequences, abandoning a
// partial match once it is not order-isomorphic to the pattern prefix or the
// remaining positions are too few to complete it. Stops counting at `limit`.
// Both spans must hold distinct values.
std::uint64_t count_occurrences(std::span<const Value> text, std::span<const Value> pattern,
                                std::uint64_t limit = kNoLimit);

// Middle-element product sum over any sequence of distinct values.
std::uint64_t count_321_middle(std::span<const Value> values);

}  // namespace detail

}  // namespace perm321
