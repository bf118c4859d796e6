#include "eulerpath/path.hpp"

#include <gtest/gtest.h>

#include "eulerpath/walks.hpp"

namespace eulerpath {
namespace {

// 0 -> 1 (e0), 1 -> 0 (e1), 0 -> 2 (e2), plus a second 0 -> 1 copy (e3).
Digraph petal_graph() {
    return build_digraph({{0, 0, 1}, {1, 1, 0}, {2, 0, 2}, {3, 0, 1}}, 0, 2);
}

TEST(ValidatePath, AcceptsAndRejects) {
    const Digraph g = petal_graph();
    const Path good{{0, 1, 0, 2}, {0, 1, 2}};
    EXPECT_NO_THROW(validate_path(g, good));
    const Path bad_edge{{0, 1, 0, 2}, {0, 1, 0}};  // last hop claims e0, whose head is 1, not 2
    EXPECT_THROW(validate_path(g, bad_edge), Error);
    const Path empty{{}, {}};
    EXPECT_THROW(validate_path(g, empty), Error);
}

TEST(LoopErase, DropsTheExcursion) {
    // Walk 0 -> 1 -> 0 -> 2: the 0-loop goes, the final hop stays.
    const Path walk{{0, 1, 0, 2}, {0, 1, 2}};
    const Path le = loop_erase(walk);
    EXPECT_EQ(le.vertices, (std::vector<VertexId>{0, 2}));
    EXPECT_EQ(le.edges, (std::vector<EdgeId>{2}));
}

TEST(LoopErase, KeepsFinalDepartureEdge) {
    // Walk 0 -> 1 -> 2 -> 1 -> 3: vertex 1 is kept, and the edge retained
    // out of it is the final departure 1 -> 3.
    const Path walk{{0, 1, 2, 1, 3}, {10, 11, 12, 13}};
    const Path le = loop_erase(walk);
    EXPECT_EQ(le.vertices, (std::vector<VertexId>{0, 1, 3}));
    EXPECT_EQ(le.edges, (std::vector<EdgeId>{10, 13}));
}

TEST(LoopErase, SelfLoopAtStart) {
    const Path walk{{0, 0, 1}, {5, 6}};
    const Path le = loop_erase(walk);
    EXPECT_EQ(le.vertices, (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(le.edges, (std::vector<EdgeId>{6}));
}

TEST(LoopErase, IdempotentAndTrivialCases) {
    const Path walk{{3, 4, 3, 4, 5}, {0, 1, 2, 3}};
    const Path once = loop_erase(walk);
    EXPECT_EQ(loop_erase(once), once);
    const Path single{{9}, {}};
    EXPECT_EQ(loop_erase(single), single);
}

TEST(LoopErase, ClosedWalkCollapsesToItsStart) {
    // The whole walk is one loop back to the start, so everything is erased.
    const Path two_self_loops{{0, 0, 0}, {4, 5}};
    EXPECT_EQ(loop_erase(two_self_loops), (Path{{0}, {}}));
    const Path triangle{{2, 5, 7, 2}, {0, 1, 2}};
    EXPECT_EQ(loop_erase(triangle), (Path{{2}, {}}));
}

TEST(LoopErase, WalkEndingOnARevisitedVertex) {
    // 1 -> 2 -> 3 -> 2: the closing 2-loop goes, leaving 1 -> 2.
    const Path walk{{1, 2, 3, 2}, {7, 8, 9}};
    const Path le = loop_erase(walk);
    EXPECT_EQ(le.vertices, (std::vector<VertexId>{1, 2}));
    EXPECT_EQ(le.edges, (std::vector<EdgeId>{7}));
}

TEST(Stacks, RecordCrossingOrder) {
    // 0 -> 1 (e0), 1 -> 0 (e1), 0 -> 1 (e3): two departures from 0.
    const Path p{{0, 1, 0, 1}, {0, 1, 3}};
    const StackConfiguration s = stacks_of_path(p);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.at(0), (std::vector<EdgeId>{0, 3}));
    EXPECT_EQ(s.at(1), (std::vector<EdgeId>{1}));
}

TEST(Stacks, FollowReplaysThePath) {
    const Digraph g = petal_graph();
    const Path p{{0, 1, 0, 2}, {0, 1, 2}};
    const FollowResult f = follow_stacks(g, 0, stacks_of_path(p));
    EXPECT_FALSE(f.step_cap_hit);
    EXPECT_EQ(f.path, p);
}

TEST(Stacks, FollowHaltsOnMissingStack) {
    const Digraph g = petal_graph();
    const FollowResult f = follow_stacks(g, 2, {});
    EXPECT_EQ(f.path.vertices, (std::vector<VertexId>{2}));
    EXPECT_TRUE(f.path.edges.empty());
    EXPECT_FALSE(f.step_cap_hit);
}

TEST(Stacks, FollowRejectsForeignEdges) {
    const Digraph g = petal_graph();
    StackConfiguration s;
    s[0] = {1};  // e1 starts at vertex 1, not 0
    EXPECT_THROW(follow_stacks(g, 0, s), Error);
}

TEST(Stacks, StepCapReported) {
    const Digraph g = petal_graph();
    const Path p{{0, 1, 0, 2}, {0, 1, 2}};
    const FollowResult f = follow_stacks(g, 0, stacks_of_path(p), 1);
    EXPECT_TRUE(f.step_cap_hit);
    EXPECT_EQ(f.path.edges.size(), 1u);
}

TEST(LastExit, FinalVertexCarriesNoEdge) {
    // 0 -> 1 (e0), 1 -> 0 (e1), 0 -> 1 (e3): final departure from 0 is e3.
    const Path p{{0, 1, 0, 1}, {0, 1, 3}};
    const InArboretum a = last_exit_arboretum(p);
    EXPECT_EQ(a.cover, (std::set<VertexId>{0, 1}));
    ASSERT_EQ(a.edge_of.size(), 1u);
    EXPECT_EQ(a.edge_of.at(0), 3u);
}

}  // namespace
}  // namespace eulerpath
