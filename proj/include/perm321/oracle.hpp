#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "perm321/bigint.hpp"
#include "perm321/permutation.hpp"

// Ground truth by full enumeration of all n! permutations. Only the generic
// pattern counter is used here, never the specialised 321 counter, the
// avoider generators or the decomposition code.

namespace perm321 {

inline constexpr int kDefaultOracleCap = 10;

struct OracleOptions {
    int cap = kDefaultOracleCap;
    int threads = 1;
    /// Called on the calling thread after each first-value partition finishes.
    std::function<void(std::size_t done, std::size_t total)> on_progress;
};

/// Number of n-permutations containing pattern exactly k times.
BigInt brute_count_exactly_k(int n, const Permutation& pattern, std::uint64_t k, const OracleOptions& options = {});

/// Occurrence count -> number of n-permutations with that count.
std::map<std::uint64_t, BigInt> brute_count_distribution(int n, const Permutation& pattern,
                                                         const OracleOptions& options = {});

/// All n-permutations with exactly one 321 occurrence, lexicographic order.
void brute_noonan_set(int n, const std::function<void(std::span<const Value>)>& sink,
                      const OracleOptions& options = {});
std::vector<Permutation> collect_brute_noonan_set(int n, const OracleOptions& options = {});

}  // namespace perm321
