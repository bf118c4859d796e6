#include "eulerpath/arborescence.hpp"

#include <gtest/gtest.h>

namespace eulerpath {
namespace {

Digraph doubled_pair() {
    return build_digraph({{0, 0, 1}, {1, 0, 1}, {2, 1, 0}, {3, 1, 0}}, 0);
}

Digraph triangle() {
    return build_digraph({{0, 0, 1}, {1, 1, 2}, {2, 2, 0}}, 0);
}

Digraph complete3() {
    return build_digraph({{0, 0, 1}, {1, 1, 0}, {2, 1, 2}, {3, 2, 1}, {4, 2, 0}, {5, 0, 2}}, 0);
}

TEST(CountArborescences, SmallClosedForms) {
    EXPECT_EQ(count_in_arborescences(doubled_pair(), 0), 2);
    EXPECT_EQ(count_in_arborescences(doubled_pair(), 1), 2);
    EXPECT_EQ(count_in_arborescences(triangle(), 0), 1);
    EXPECT_EQ(count_in_arborescences(complete3(), 0), 3);
    EXPECT_EQ(count_in_arborescences(complete3(), 1), 3);
}

TEST(CountArborescences, SelfLoopsAreIrrelevant) {
    const Digraph g =
        build_digraph({{0, 0, 1}, {1, 1, 2}, {2, 2, 0}, {7, 1, 1}, {8, 2, 2}}, 0);
    EXPECT_EQ(count_in_arborescences(g, 0), 1);
}

TEST(CountArborescences, UnreachableRootGivesZero) {
    const Digraph g = build_digraph({{0, 0, 1}}, 0, 1);
    EXPECT_EQ(count_in_arborescences(g, 0), 0);
}

TEST(EnumerateArborescences, MatchesCountsAndValidates) {
    for (const Digraph& g : {doubled_pair(), triangle(), complete3()}) {
        for (VertexId root : g.vertices()) {
            const auto arbs = enumerate_in_arborescences(g, root, 1000);
            EXPECT_EQ(BigInt(arbs.size()), count_in_arborescences(g, root));
            for (const InArboretum& a : arbs) {
                EXPECT_FALSE(validate_in_arborescence(g, edge_set(a), root).has_value());
                EXPECT_EQ(a.edge_of.count(root), 0u);
                EXPECT_EQ(a.edge_of.size(), g.vertex_count() - 1);
            }
        }
    }
}

TEST(EnumerateArborescences, SingleVertexHasTheEmptyArborescence) {
    const Digraph g(std::vector<EdgeSpec>{}, 5);
    const auto arbs = enumerate_in_arborescences(g, 5, 10);
    ASSERT_EQ(arbs.size(), 1u);
    EXPECT_TRUE(arbs[0].edge_of.empty());
}

TEST(EnumerateArborescences, CapThrows) {
    EXPECT_THROW(enumerate_in_arborescences(complete3(), 0, 2), CapExceeded);
}

TEST(ValidateArborescence, RejectsCycleWithWitness) {
    // 0 -> 1 and 1 -> 0 form a cycle that never reaches root 2.
    const Digraph g = build_digraph({{0, 0, 1}, {1, 1, 0}, {2, 1, 2}}, 0, 2);
    const auto witness = validate_in_arborescence(g, {0, 1}, 2);
    ASSERT_TRUE(witness.has_value());
}

TEST(ValidateArborescence, RejectsMissingAndDoubledEdges) {
    const Digraph g = complete3();
    EXPECT_TRUE(validate_in_arborescence(g, {1}, 0).has_value());        // vertex 2 missing
    EXPECT_TRUE(validate_in_arborescence(g, {1, 2, 4}, 0).has_value());  // vertex 1 doubled
    EXPECT_FALSE(validate_in_arborescence(g, {1, 4}, 0).has_value());
}

TEST(Past, CollectsAncestorsIncludingTheVertex) {
    // Chain 0 -> 1 -> 2 rooted at 2.
    InArboretum a;
    a.edge_of = {{0, 0}, {1, 1}};
    a.cover = {0, 1, 2};
    const Digraph g = build_digraph({{0, 0, 1}, {1, 1, 2}}, 0, 2);
    const PastResult p = past(a, g, 1, 10);
    EXPECT_FALSE(p.bound_exceeded);
    EXPECT_EQ(p.vertices, (std::set<VertexId>{0, 1}));
    const PastResult leaf = past(a, g, 0, 10);
    EXPECT_EQ(leaf.vertices, (std::set<VertexId>{0}));
}

TEST(Past, BoundExceededIsFlagged) {
    InArboretum a;
    a.edge_of = {{0, 0}, {1, 1}};
    a.cover = {0, 1, 2};
    const Digraph g = build_digraph({{0, 0, 1}, {1, 1, 2}}, 0, 2);
    const PastResult p = past(a, g, 1, 1);
    EXPECT_TRUE(p.bound_exceeded);
}

}  // namespace
}  // namespace eulerpath
