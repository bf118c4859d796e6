#include "eulerpath/rng.hpp"

#include <gtest/gtest.h>

#include <set>

namespace eulerpath {
namespace {

TEST(Rng, StreamsAreDeterministic) {
    RngStream a = make_stream(42, 7);
    RngStream b = make_stream(42, 7);
    for (int i = 0; i < 16; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, DistinctIndicesGiveDistinctStreams) {
    RngStream a = make_stream(42, 0);
    RngStream b = make_stream(42, 1);
    bool differs = false;
    for (int i = 0; i < 8; ++i) differs = differs || a.next() != b.next();
    EXPECT_TRUE(differs);
}

TEST(Rng, BelowStaysInRange) {
    RngStream rng = make_stream(1, 0);
    for (int i = 0; i < 5000; ++i) EXPECT_LT(rng.below(7), 7u);
    EXPECT_EQ(rng.below(1), 0u);
}

TEST(Rng, BelowCoversAllResidues) {
    RngStream rng = make_stream(1, 1);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) seen.insert(rng.below(5));
    EXPECT_EQ(seen.size(), 5u);
}

TEST(Rng, ShuffleIsAPermutationAndDeterministic) {
    std::vector<int> items{1, 2, 3, 4, 5, 6, 7};
    std::vector<int> copy = items;
    RngStream a = make_stream(3, 0);
    RngStream b = make_stream(3, 0);
    a.shuffle(items);
    b.shuffle(copy);
    EXPECT_EQ(items, copy);
    std::sort(copy.begin(), copy.end());
    EXPECT_EQ(copy, (std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
}

TEST(Rng, PickReturnsAnElement) {
    const std::vector<int> items{10, 20, 30};
    RngStream rng = make_stream(9, 9);
    for (int i = 0; i < 50; ++i) {
        const int v = rng.pick(items);
        EXPECT_TRUE(v == 10 || v == 20 || v == 30);
    }
}

}  // namespace
}  // namespace eulerpath
