#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "perm321/avoiders.hpp"
#include "perm321/permutation.hpp"

namespace perm321 {

/// The pair attached to an n-permutation with exactly one 321 occurrence cba.
///
/// Writing the permutation as p1 c p2 b p3 a p4, sigma1 = p1 b p2 a is a
/// 321-avoiding permutation of {1..b} not ending in b, and sigma2 = c p3 b p4
/// is a 321-avoiding arrangement of {b..n} not starting with b. The value b
/// belongs to both halves.
struct Decomposition {
    int b = 0;
    Permutation sigma1;
    ValueSequence sigma2;
    int n = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws Error(ConstraintViolation) naming the first broken invariant.
void validate(const Decomposition& d);

/// Splits a permutation around its unique 321 occurrence. Throws
/// Error(NoUnique321) unless there is exactly one occurrence, and
/// Error(InternalConstraintViolation) if the produced halves break an invariant.
Decomposition decompose(const Permutation& perm);

/// Inverse of decompose: rebuilds p1 c p2 b p3 a p4. Rejects invalid input
/// with Error(ConstraintViolation); the result is checked to contain exactly
/// one 321 occurrence.
Permutation compose(const Decomposition& d);

/// Every n-permutation with exactly one 321 occurrence, produced by composing
/// all (sigma1, sigma2) pairs: ascending b, then sigma1, then sigma2 in
/// lexicographic order. Empty for n < 3.
void enumerate_noonan(int n, const SequenceSink& sink, const GenerationOptions& options = {});
std::vector<Permutation> collect_noonan(int n, const GenerationOptions& options = {});

/// "b=<int> | sigma1=<one-line> | sigma2=<one-line>"
std::string format_decomposition(const Decomposition& d);

/// Parses the single-line form above; n is recovered as b + |sigma2| - 1.
/// Throws Error(ParseError) on layout problems. Invariants are not checked.
Decomposition parse_decomposition(std::string_view text);

}  // namespace perm321
