#include "perm321/bijection.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "perm321/catalan.hpp"
#include "perm321/errors.hpp"
#include "perm321/patterns.hpp"
#include "support/reference.hpp"

namespace perm321 {
namespace {

Permutation P(std::initializer_list<Value> v) { return Permutation::from_one_line(v); }
ValueSequence S(std::initializer_list<Value> v) { return ValueSequence::from_values(v); }

std::vector<Permutation> reference_noonan_set(int n) {
    std::vector<Permutation> out;
    for (const auto& p : reference::all_permutations(n))
        if (reference::triple_scan_321(p) == 1) out.push_back(Permutation::from_one_line(p));
    return out;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected perm321::Error";
    return ErrorKind::ParseError;
}

TEST(Decompose, SpecExamples) {
    EXPECT_EQ(decompose(P({3, 2, 1})), (Decomposition{2, P({2, 1}), S({3, 2}), 3}));
    EXPECT_EQ(decompose(P({3, 2, 1, 4})), (Decomposition{2, P({2, 1}), S({3, 2, 4}), 4}));
    EXPECT_EQ(decompose(P({1, 4, 3, 2})), (Decomposition{3, P({1, 3, 2}), S({4, 3}), 4}));
}

TEST(Decompose, RejectsPermutationsWithoutAUniqueOccurrence) {
    EXPECT_EQ(kind_of([] { decompose(P({1, 2, 3})); }), ErrorKind::NoUnique321);
    EXPECT_EQ(kind_of([] { decompose(P({4, 3, 2, 1})); }), ErrorKind::NoUnique321);
    EXPECT_EQ(kind_of([] { decompose(Permutation{}); }), ErrorKind::NoUnique321);
}

TEST(Compose, SpecExamples) {
    EXPECT_EQ(compose(Decomposition{2, P({2, 1}), S({3, 2}), 3}), P({3, 2, 1}));
    EXPECT_EQ(compose(Decomposition{3, P({1, 3, 2}), S({4, 3}), 4}), P({1, 4, 3, 2}));
    EXPECT_EQ(reference::triple_scan_321({3, 2, 4, 1}), 1u);
    EXPECT_EQ(compose(Decomposition{2, P({2, 1}), S({3, 4, 2}), 4}), P({3, 2, 4, 1}));
}

TEST(Compose, RejectsInvalidDecompositions) {
    // sigma1 ends with b.
    EXPECT_EQ(kind_of([] { compose(Decomposition{2, P({1, 2}), S({3, 2}), 3}); }), ErrorKind::ConstraintViolation);
    // sigma2 starts with b.
    EXPECT_EQ(kind_of([] { compose(Decomposition{2, P({2, 1}), S({2, 3}), 3}); }), ErrorKind::ConstraintViolation);
    // Wrong sigma1 size for b.
    EXPECT_EQ(kind_of([] { compose(Decomposition{3, P({2, 1}), S({4, 3}), 4}); }), ErrorKind::ConstraintViolation);
    // sigma2 support is not {b..n}.
    EXPECT_EQ(kind_of([] { compose(Decomposition{2, P({2, 1}), S({5, 2}), 3}); }), ErrorKind::ConstraintViolation);
    EXPECT_EQ(kind_of([] { compose(Decomposition{2, P({2, 1}), S({3, 2}), 4}); }), ErrorKind::ConstraintViolation);
    // sigma1 contains 321.
    EXPECT_EQ(kind_of([] { compose(Decomposition{4, P({3, 2, 1, 4}), S({5, 4}), 5}); }),
              ErrorKind::ConstraintViolation);
    // sigma2 contains 321.
    EXPECT_EQ(kind_of([] { compose(Decomposition{2, P({2, 1}), S({5, 4, 2, 3}), 5}); }),
              ErrorKind::ConstraintViolation);
    // b out of range.
    EXPECT_EQ(kind_of([] { compose(Decomposition{1, P({1}), S({2, 1}), 2}); }), ErrorKind::ConstraintViolation);
}

TEST(Bijection, ComposeInvertsDecomposeOnNoonanSets) {
    for (int n = 3; n <= 8; ++n) {
        for (const auto& perm : reference_noonan_set(n)) {
            const auto d = decompose(perm);
            ASSERT_NO_THROW(validate(d));
            ASSERT_EQ(compose(d), perm) << perm;
        }
    }
}

TEST(Bijection, DecomposeInvertsComposeOnAllPairs) {
    for (int n = 3; n <= 8; ++n) {
        for (int b = 2; b <= n - 1; ++b) {
            const auto firsts = collect_sigma1(b);
            const auto seconds = collect_sigma2(b, n);
            for (const auto& s1 : firsts) {
                for (const auto& s2 : seconds) {
                    const Decomposition d{b, s1, s2, n};
                    const auto perm = compose(d);
                    ASSERT_EQ(count_321(perm), 1);
                    ASSERT_EQ(decompose(perm), d) << perm;
                }
            }
        }
    }
}

TEST(Bijection, ImageCountsPerMiddleValue) {
    for (int n = 3; n <= 8; ++n) {
        std::map<int, BigInt> by_b;
        for (const auto& perm : reference_noonan_set(n)) by_b[decompose(perm).b] += 1;
        for (int b = 2; b <= n - 1; ++b) {
            const BigInt expected = (catalan(b) - catalan(b - 1)) * (catalan(n - b + 1) - catalan(n - b));
            ASSERT_EQ(by_b[b], expected) << "n=" << n << " b=" << b;
        }
        ASSERT_EQ(by_b.size(), static_cast<std::size_t>(n - 2));
    }
}

// Left of b only c can exceed b; right of b only a can fall below it.
TEST(Bijection, StructuralLemmaAroundMiddleValue) {
    for (int n = 3; n <= 8; ++n) {
        for (const auto& perm : reference_noonan_set(n)) {
            const auto occ = find_unique_321(perm);
            const int j = occ.positions[1];
            for (int pos = 1; pos <= n; ++pos) {
                const Value v = perm.at(pos);
                if (pos < j && pos != occ.positions[0]) ASSERT_LT(v, occ.b) << perm;
                if (pos > j && pos != occ.positions[2]) ASSERT_GT(v, occ.b) << perm;
            }
        }
    }
}

TEST(EnumerateNoonan, SpecExamples) {
    EXPECT_EQ(collect_noonan(3), std::vector<Permutation>{P({3, 2, 1})});
    const std::vector<Permutation> four{P({3, 2, 1, 4}), P({3, 2, 4, 1}), P({4, 2, 1, 3}),
                                        P({1, 4, 3, 2}), P({2, 4, 3, 1}), P({4, 1, 3, 2})};
    EXPECT_EQ(collect_noonan(4), four);
    EXPECT_EQ(collect_noonan(5).size(), 27u);
}

TEST(EnumerateNoonan, EmptyBelowThree) {
    EXPECT_TRUE(collect_noonan(0).empty());
    EXPECT_TRUE(collect_noonan(2).empty());
}

TEST(EnumerateNoonan, SetEqualsReferenceFilter) {
    for (int n = 3; n <= 8; ++n) {
        auto generated = collect_noonan(n);
        ASSERT_EQ(generated.size(), noonan_closed(n));
        std::sort(generated.begin(), generated.end());
        ASSERT_TRUE(std::adjacent_find(generated.begin(), generated.end()) == generated.end());
        ASSERT_EQ(generated, reference_noonan_set(n)) << n;
    }
}

TEST(EnumerateNoonan, OrderFollowsMiddleValueThenSigmas) {
    const auto all = collect_noonan(7);
    for (std::size_t i = 1; i < all.size(); ++i) {
        const auto prev = decompose(all[i - 1]);
        const auto cur = decompose(all[i]);
        const auto key = [](const Decomposition& d) { return std::tie(d.b, d.sigma1, d.sigma2); };
        ASSERT_LT(key(prev), key(cur));
    }
}

TEST(EnumerateNoonan, ThreadCountDoesNotChangeOutput) {
    const auto serial = collect_noonan(8);
    for (const int threads : {0, 2, 5}) {
        EXPECT_EQ(collect_noonan(8, GenerationOptions{kDefaultGenerationCap, threads}), serial);
    }
}

TEST(EnumerateNoonan, CapIsEnforced) {
    EXPECT_EQ(kind_of([] { collect_noonan(15); }), ErrorKind::CapExceeded);
}

TEST(DecompositionText, FormatMatchesLayout) {
    EXPECT_EQ(format_decomposition(decompose(P({3, 2, 1, 4}))), "b=2 | sigma1=2 1 | sigma2=3 2 4");
}

TEST(DecompositionText, RoundTripsOnRandomNoonanPermutations) {
    std::mt19937_64 rng(3);
    for (int n = 3; n <= 12; ++n) {
        const auto all = collect_noonan(n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto d = decompose(all[rng() % all.size()]);
            const auto text = format_decomposition(d);
            ASSERT_EQ(parse_decomposition(text), d) << text;
            ASSERT_EQ(format_decomposition(parse_decomposition(text)), text);
        }
    }
}

TEST(DecompositionText, MalformedInput) {
    EXPECT_EQ(kind_of([] { parse_decomposition("b=2 | sigma1=2 1"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_decomposition("c=2 | sigma1=2 1 | sigma2=3 2"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_decomposition("b=2 3 | sigma1=2 1 | sigma2=3 2"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_decomposition("b=2 | sigma1=2 2 | sigma2=3 2"); }), ErrorKind::NotAPermutation);
}

}  // namespace
}  // namespace perm321
