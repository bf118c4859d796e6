#include "eulerpath/euler.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace eulerpath {
namespace {

// Two parallel edges each way between 0 and 1; circuit at 0.
Digraph doubled_pair() {
    return build_digraph({{0, 0, 1}, {1, 0, 1}, {2, 1, 0}, {3, 1, 0}}, 0);
}

Digraph triangle() {
    return build_digraph({{0, 0, 1}, {1, 1, 2}, {2, 2, 0}}, 0);
}

// Petals 0 -> 1 -> 0 and 0 -> 2 -> 0; circuit at 0.
Digraph two_petals() {
    return build_digraph({{0, 0, 1}, {1, 1, 0}, {2, 0, 2}, {3, 2, 0}}, 0);
}

TEST(CountEulerianPaths, ClosedFormOracles) {
    EXPECT_EQ(count_eulerian_paths(doubled_pair()), 4);
    EXPECT_EQ(count_eulerian_paths(triangle()), 1);
    EXPECT_EQ(count_eulerian_paths(two_petals()), 2);
}

TEST(CountEulerianPaths, SingleVertexHasTheEmptyCircuit) {
    const Digraph g(std::vector<EdgeSpec>{}, 0);
    EXPECT_EQ(count_eulerian_paths(g), 1);
    EXPECT_EQ(count_eulerian_paths_exhaustive(g), 1u);
    const auto paths = enumerate_eulerian_paths(g, 10);
    ASSERT_EQ(paths.size(), 1u);
    EXPECT_TRUE(paths[0].edges.empty());
}

TEST(CountEulerianPaths, WindowOfForwardBackwardFamily) {
    // Depth-6 window of the family with 2 forward / 1 backward edge per
    // level: 64 arborescences at the boundary and 2^5 free top choices at
    // the interior branching vertices give 2048 paths.
    const ContractedDigraph window = contract_boundary(ladder_family(2, 1), 6);
    EXPECT_EQ(count_eulerian_paths(window.graph), 2048);
}

TEST(CountEulerianPaths, RejectsNonEulerian) {
    // 0 -> 1 only: vertex 0 has out 1 / in 0, no sink declared.
    const Digraph g = build_digraph({{0, 0, 1}}, 0);
    try {
        count_eulerian_paths(g);
        FAIL() << "expected NotEulerianInput";
    } catch (const NotEulerianInput& e) {
        ASSERT_TRUE(e.witness.has_value());
    }
}

TEST(EnumerateEulerianPaths, MatchesCountAndValidates) {
    for (const Digraph& g : {doubled_pair(), triangle(), two_petals()}) {
        const auto paths = enumerate_eulerian_paths(g, 1000);
        EXPECT_EQ(BigInt(paths.size()), count_eulerian_paths(g));
        EXPECT_EQ(paths.size(), count_eulerian_paths_exhaustive(g));
        std::set<std::vector<EdgeId>> distinct;
        for (const Path& p : paths) {
            validate_path(g, p);
            EXPECT_EQ(p.length(), g.edge_count());
            distinct.insert(p.edges);
        }
        EXPECT_EQ(distinct.size(), paths.size());
    }
}

TEST(EnumerateEulerianPaths, CapThrows) {
    EXPECT_THROW(enumerate_eulerian_paths(doubled_pair(), 3), CapExceeded);
}

TEST(IsEulerianStack, AcceptsExactlyTheWellFormedConfigurations) {
    const Digraph g = doubled_pair();
    // Bottom at vertex 1 may be either 1 -> 0 edge; both yield valid stacks.
    const StackConfiguration good{{0, {1, 0}}, {1, {3, 2}}};
    EXPECT_TRUE(is_eulerian_stack(g, 0, 0, good));

    StackConfiguration repeated = good;
    repeated[0] = {0, 0};  // not a permutation of {0, 1}
    EXPECT_FALSE(is_eulerian_stack(g, 0, 0, repeated));

    StackConfiguration missing = good;
    missing.erase(1);
    EXPECT_FALSE(is_eulerian_stack(g, 0, 0, missing));

    StackConfiguration foreign = good;
    foreign[7] = {0};
    EXPECT_FALSE(is_eulerian_stack(g, 0, 0, foreign));
}

TEST(IsEulerianStack, BottomArborescenceConditionBites) {
    // Path case on the two-petal graph with sink 2: z = 2, so bottoms at 0
    // and 1 must flow to 2.  Bottom e0 (0 -> 1) at vertex 0 cannot.
    const Digraph g = build_digraph({{0, 0, 1}, {1, 1, 0}, {2, 0, 2}}, 0, 2);
    const StackConfiguration good{{0, {0, 2}}, {1, {1}}};
    EXPECT_TRUE(is_eulerian_stack(g, 0, 2, good));
    const StackConfiguration bad{{0, {2, 0}}, {1, {1}}};
    EXPECT_FALSE(is_eulerian_stack(g, 0, 2, bad));
}

TEST(SampleEulerianFinite, ProducesValidatedPathsDeterministically) {
    const Digraph g = two_petals();
    RngStream a = make_stream(9, 0);
    RngStream b = make_stream(9, 0);
    const Path pa = sample_eulerian_finite(g, a);
    const Path pb = sample_eulerian_finite(g, b);
    EXPECT_EQ(pa, pb);
    validate_path(g, pa);
    EXPECT_EQ(pa.length(), g.edge_count());
    EXPECT_EQ(pa.start(), 0u);
    EXPECT_EQ(pa.end(), 0u);

    // Every sample is one of the enumerated paths.
    const auto all = enumerate_eulerian_paths(g, 100);
    for (std::uint64_t i = 0; i < 50; ++i) {
        RngStream s = make_stream(11, i);
        const Path p = sample_eulerian_finite(g, s);
        EXPECT_NE(std::find(all.begin(), all.end(), p), all.end());
    }
}

TEST(SampleEulerianFinite, RejectsNonEulerian) {
    const Digraph g = build_digraph({{0, 0, 1}}, 0);
    RngStream rng = make_stream(1, 0);
    EXPECT_THROW(sample_eulerian_finite(g, rng), NotEulerianInput);
}

TEST(GibbsPrefix, ForwardOnlyFamilyIsForced) {
    // One forward edge per level and no backward edges: the only possible
    // prefix is 0 -> 1 -> ... -> k along edge ids 0..k-1, and every stack
    // decision is forced, so nothing is ever truncated even at horizon 10.
    const LazyDigraph g = ladder_family(1, 0);
    RngStream rng = make_stream(5, 0);
    const GibbsPrefixSample s = sample_gibbs_prefix(g, 5, 10, rng);
    EXPECT_EQ(s.path.vertices, (std::vector<VertexId>{0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(s.path.edges, (std::vector<EdgeId>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(s.truncated_stack_vertices.empty());
}

TEST(GibbsPrefix, ForwardBackwardFamilySamplesValidPrefixes) {
    const LazyDigraph g = ladder_family(2, 1);
    GibbsPrefixSampler sampler(g, 10000);
    RngStream a = make_stream(3, 7);
    RngStream b = make_stream(3, 7);
    const GibbsPrefixSample sa = sampler.sample(4, a);
    const GibbsPrefixSample sb = sample_gibbs_prefix(g, 4, 10000, b);
    EXPECT_EQ(sa.path, sb.path);  // same stream, same draw, reused or fresh sampler
    ASSERT_EQ(sa.path.edges.size(), 4u);
    EXPECT_EQ(sa.path.vertices.front(), 0u);
    for (std::size_t i = 0; i < sa.path.edges.size(); ++i) {
        const VertexId at = sa.path.vertices[i];
        const auto& out = g.out_edges(at);
        const EdgeId e = sa.path.edges[i];
        const auto it = std::find_if(out.begin(), out.end(),
                                     [&](const OutEdge& oe) { return oe.id == e; });
        ASSERT_NE(it, out.end());
        EXPECT_EQ(it->head, sa.path.vertices[i + 1]);
    }
    EXPECT_GT(sa.covered_edge_count, 0u);
}

TEST(GibbsPrefix, RejectsBalancedSourceFamily) {
    // One forward and one backward edge per level leaves the source with
    // out-degree == in-degree, so no source-to-infinity Eulerian path exists.
    const LazyDigraph g = ladder_family(1, 1);
    RngStream rng = make_stream(1, 0);
    EXPECT_THROW(sample_gibbs_prefix(g, 3, 100, rng), NotEulerianInput);
}

TEST(GibbsPrefix, RejectsZeroArguments) {
    const LazyDigraph g = ladder_family(2, 1);
    RngStream rng = make_stream(1, 0);
    EXPECT_THROW(GibbsPrefixSampler(g, 0), Error);
    GibbsPrefixSampler sampler(g, 100);
    EXPECT_THROW(sampler.sample(0, rng), Error);
}

}  // namespace
}  // namespace eulerpath
