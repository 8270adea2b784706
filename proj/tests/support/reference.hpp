#pragma once

// Slow reference implementations used only by tests. None of them touch the
// library's counting, generation or decomposition code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace perm321::reference {

using Seq = std::vector<int>;

inline std::vector<Seq> all_permutations(int n) {
    Seq p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Seq> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::uint64_t triple_scan_321(const Seq& p) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            for (std::size_t k = j + 1; k < p.size(); ++k)
                if (p[i] > p[j] && p[j] > p[k]) ++count;
    return count;
}

// Ranks of values within a sequence: the standardisation to 1..k.
inline Seq standardise(const Seq& s) {
    Seq sorted = s;
    std::sort(sorted.begin(), sorted.end());
    Seq out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s[i]) - sorted.begin()) + 1;
    }
    return out;
}

// Enumerates every k-subset of positions via bitmasks and compares the
// standardised subsequence with the pattern. n must be < 64.
inline std::uint64_t subset_occurrences(const Seq& p, const Seq& pattern) {
    const auto n = p.size();
    const auto k = pattern.size();
    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
        Seq sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) sub.push_back(p[i]);
        if (standardise(sub) == pattern) ++count;
    }
    return count;
}

inline Seq random_permutation(int n, std::mt19937_64& rng) {
    Seq p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace perm321::reference
