#include "eulerpath/digraph.hpp"

#include <gtest/gtest.h>

namespace eulerpath {
namespace {

// Two vertices with doubled edges in both directions.
Digraph doubled_pair() {
    return build_digraph({{0, 0, 1}, {1, 0, 1}, {2, 1, 0}, {3, 1, 0}}, 0);
}

TEST(Digraph, AccessorsAreSortedAndConsistent) {
    const Digraph g = build_digraph({{5, 2, 0}, {1, 0, 1}, {3, 1, 2}}, 0);
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.vertices(), (std::vector<VertexId>{0, 1, 2}));
    EXPECT_EQ(g.edge_ids(), (std::vector<EdgeId>{1, 3, 5}));
    EXPECT_EQ(g.tail(5), 2u);
    EXPECT_EQ(g.head(5), 0u);
    EXPECT_EQ(g.out_edges(0), (std::vector<EdgeId>{1}));
    EXPECT_EQ(g.in_degree(2), 1u);
    EXPECT_EQ(g.out_degree(2), 1u);
    EXPECT_EQ(g.source(), 0u);
    EXPECT_FALSE(g.sink().has_value());
}

TEST(Digraph, SortedParallelEdges) {
    const Digraph g = doubled_pair();
    EXPECT_EQ(g.out_edges(0), (std::vector<EdgeId>{0, 1}));
    EXPECT_EQ(g.out_edges(1), (std::vector<EdgeId>{2, 3}));
    EXPECT_EQ(g.in_degree(0), 2u);
}

TEST(Digraph, RejectsDuplicateEdgeIds) {
    EXPECT_THROW(build_digraph({{0, 0, 1}, {0, 1, 0}}, 0), DuplicateEdgeId);
}

TEST(Digraph, UnknownLookupsThrow) {
    const Digraph g = build_digraph({{0, 0, 1}}, 0);
    EXPECT_THROW(g.index_of(9), UnknownVertex);
    EXPECT_THROW(g.spec(9), UnknownEdge);
    EXPECT_THROW(g.out_edges(9), UnknownVertex);
}

TEST(Digraph, SinkVertexJoinsVertexSetEvenWhenIsolated) {
    const Digraph g = build_digraph({{0, 0, 1}}, 0, 7);
    EXPECT_TRUE(g.has_vertex(7));
    EXPECT_EQ(g.out_degree(7), 0u);
}

TEST(Classify, CircuitCase) {
    const EulerianClassification c = classify_eulerian(doubled_pair());
    EXPECT_EQ(c.kind, EulerianKind::FiniteCircuitRoot);
    EXPECT_EQ(c.start, 0u);
    EXPECT_EQ(c.end, 0u);
    EXPECT_FALSE(c.witness.has_value());
}

TEST(Classify, SourceSinkCase) {
    const Digraph g = build_digraph({{0, 0, 1}, {1, 1, 2}}, 0, 2);
    const EulerianClassification c = classify_eulerian(g);
    EXPECT_EQ(c.kind, EulerianKind::FiniteSourceSink);
    EXPECT_EQ(c.start, 0u);
    EXPECT_EQ(c.end, 2u);
}

TEST(Classify, ImbalanceWithoutSinkIsRejectedWithWitness) {
    // Without a declared sink the law must be a circuit, and vertex 0 is
    // out-heavy.
    const Digraph g = build_digraph({{0, 0, 1}, {1, 1, 2}}, 0);
    const EulerianClassification c = classify_eulerian(g);
    EXPECT_EQ(c.kind, EulerianKind::NotEulerian);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(c.witness->vertex, 0u);
    EXPECT_EQ(c.witness->out_degree, 1u);
    EXPECT_EQ(c.witness->in_degree, 0u);
}

TEST(Classify, DegreeViolationYieldsWitness) {
    const Digraph g = build_digraph({{0, 0, 1}, {1, 0, 1}}, 0, 1);
    const EulerianClassification c = classify_eulerian(g);
    EXPECT_EQ(c.kind, EulerianKind::NotEulerian);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(c.witness->vertex, 0u);
    EXPECT_EQ(c.witness->out_degree, 2u);
}

TEST(Classify, DisconnectedBalancedGraphIsRejected) {
    // Two disjoint self-loops: all degrees balanced, no route between them.
    const Digraph g = build_digraph({{0, 0, 0}, {1, 1, 1}}, 0);
    EXPECT_EQ(classify_eulerian(g).kind, EulerianKind::NotEulerian);
}

TEST(Classify, SingleVertexNoEdgesIsTrivialCircuit) {
    const Digraph g(std::vector<EdgeSpec>{}, 0);
    EXPECT_EQ(classify_eulerian(g).kind, EulerianKind::FiniteCircuitRoot);
}

TEST(CommunicatingClasses, CycleIsIrreducible) {
    const Digraph g = build_digraph({{0, 0, 1}, {1, 1, 2}, {2, 2, 0}}, 0);
    const CommunicatingClasses cc = communicating_classes(g);
    EXPECT_TRUE(cc.irreducible);
    ASSERT_EQ(cc.classes.size(), 1u);
    EXPECT_EQ(cc.classes[0], (std::vector<VertexId>{0, 1, 2}));
}

TEST(CommunicatingClasses, ChainSplits) {
    const Digraph g = build_digraph({{0, 0, 1}}, 0, 1);
    const CommunicatingClasses cc = communicating_classes(g);
    EXPECT_FALSE(cc.irreducible);
    EXPECT_EQ(cc.classes.size(), 2u);
}

}  // namespace
}  // namespace eulerpath
