#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "perm321/permutation.hpp"

namespace perm321 {

inline constexpr int kDefaultGenerationCap = 14;

/// Receives each generated item. The span is only valid during the call.
using SequenceSink = std::function<void(std::span<const Value>)>;

struct GenerationOptions {
    int cap = kDefaultGenerationCap;
    /// Worker count; 0 picks the hardware concurrency. Emission order does not
    /// depend on it.
    int threads = 1;
};

/// Incremental 321-avoidance state for a growing one-line prefix.
///
/// Keeps the prefix maximum and the largest value that already has a larger
/// value before it. Appending v closes a 321 iff v is below the latter.
class AvoidanceTracker {
public:
    bool closes_321(Value v) const noexcept { return v < dominated_max_; }

    void push(Value v) noexcept {
        if (v < prefix_max_) {
            dominated_max_ = std::max(dominated_max_, v);
        } else {
            prefix_max_ = v;
        }
    }

    Value prefix_max() const noexcept { return prefix_max_; }
    Value dominated_max() const noexcept { return dominated_max_; }

private:
    Value prefix_max_ = 0;
    Value dominated_max_ = 0;
};

/// True iff the values (compared by relative order) contain no 321.
bool is_avoiding_321(std::span<const Value> values);
bool is_avoiding_321(const Permutation& perm);
bool is_avoiding_321(const ValueSequence& seq);

/// True iff prefix, a sequence of distinct values from {1..n}, can be
/// completed to a 321-avoiding permutation of {1..n}. This is the pruning
/// test used by the generators.
bool extends_to_avoider(std::span<const Value> prefix, int n);

/// Streams every 321-avoiding permutation of {1..n} once, in lexicographic
/// order. Throws Error(CapExceeded) when n > options.cap.
void enumerate_avoiders(int n, const SequenceSink& sink, const GenerationOptions& options = {});

/// 321-avoiding permutations of {1..b} that do not end with b. Requires b >= 2
/// (Error(InvalidB)).
void enumerate_sigma1(int b, const SequenceSink& sink, const GenerationOptions& options = {});

/// 321-avoiding arrangements of the values {b..n} that do not start with b.
/// Requires 2 <= b <= n-1 (Error(InvalidRange)); the cap applies to n-b+1.
void enumerate_sigma2(int b, int n, const SequenceSink& sink, const GenerationOptions& options = {});

std::vector<Permutation> collect_avoiders(int n, const GenerationOptions& options = {});
std::vector<Permutation> collect_sigma1(int b, const GenerationOptions& options = {});
std::vector<ValueSequence> collect_sigma2(int b, int n, const GenerationOptions& options = {});

}  // namespace perm321
