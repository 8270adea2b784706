#pragma once

#include <span>
#include <vector>

#include "perm321/bigint.hpp"

namespace perm321 {

/// binom(n, k) exactly; 0 when k < 0 or k > n. Requires n >= 0.
BigInt binomial(int n, int k);

/// C_n = binom(2n, n) / (n + 1), with the division checked to be exact.
BigInt catalan(int n);

/// C_0, ..., C_max_n built from C_0 = 1 and C_m = sum_{i<m} C_i C_{m-1-i}.
std::vector<BigInt> catalan_table(int max_n);

/// Number of n-permutations with exactly one 321 occurrence, via
/// 3 * binom(2n, n+3) / n. Zero for n < 3. Requires n >= 1; throws
/// Error(NonIntegerResult) if the division leaves a remainder.
BigInt noonan_closed(int n);

/// C_{n+2} - 4 C_{n+1} + 3 C_n using the closed-form Catalan numbers. Requires n >= 1.
BigInt noonan_catalan_form(int n);

/// sum_{b=2}^{n-1} (C_b - C_{b-1}) (C_{n-b+1} - C_{n-b}), the product count of
/// the decomposition pairs. Empty (zero) for n < 3. Requires n >= 1.
BigInt noonan_convolution(int n);

/// Same sum reading Catalan numbers from a table; table must hold C_0..C_n.
BigInt noonan_convolution(int n, std::span<const BigInt> table);

}  // namespace perm321
