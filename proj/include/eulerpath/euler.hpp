#ifndef EULERPATH_EULER_HPP
#define EULERPATH_EULER_HPP

#include <cstdint>
#include <vector>

#include "eulerpath/arborescence.hpp"
#include "eulerpath/digraph.hpp"
#include "eulerpath/lazy_digraph.hpp"
#include "eulerpath/path.hpp"
#include "eulerpath/rng.hpp"
#include "eulerpath/wilson.hpp"

namespace eulerpath {

// Exact number of Eulerian o->z paths (o->o circuits when no distinct sink):
// the arborescence count at z times out-deg(z)! times (out-deg(v)-1)! over
// the remaining vertices.  Throws NotEulerianInput with a witness when the
// graph carries no Eulerian path.
BigInt count_eulerian_paths(const Digraph& g);

// All Eulerian paths by backtracking over unused out-edges in edge-id order;
// deterministic output order.  Throws CapExceeded past `cap`.
std::vector<Path> enumerate_eulerian_paths(const Digraph& g, std::uint64_t cap);

// Same search, counting instead of materializing - the independent oracle
// route against which the closed-form count is checked.
std::uint64_t count_eulerian_paths_exhaustive(const Digraph& g);

// The stack characterization: true iff every vertex's stack lists its
// out-edges exactly once and the bottom-of-stack edges away from z form a
// spanning in-arborescence rooted at z.  When true, following the stacks
// from o yields an Eulerian o->z path.  Malformed stacks simply fail the
// first condition (returns false rather than throwing).
bool is_eulerian_stack(const Digraph& g, VertexId o, VertexId z, const StackConfiguration& s);

// Uniform Eulerian path: wilson_finite picks the stack bottoms, independent
// uniform permutations fill the rest (all of z's stack is free), and the
// stacks are followed from o.
Path sample_eulerian_finite(const Digraph& g, RngStream& rng);

struct GibbsPrefixSample {
    Path path;
    std::uint64_t horizon_used;
    std::vector<VertexId> truncated_stack_vertices;  // sorted; stacks built on cut-off walks
    std::size_t covered_edge_count;  // arboretum edges revealed while drawing this prefix
};

// k-step prefix sampler for the source-to-infinity Eulerian path law on a
// lazy graph.  Stacks materialize per vertex on first arrival: the arboretum
// edge from an incremental infinite-rooted Wilson run goes at the bottom,
// the remaining out-edges above it in uniform random order.  One sampler
// instance amortizes graph caches across many samples; each sample() call
// starts a fresh arboretum and stack state.
class GibbsPrefixSampler {
  public:
    GibbsPrefixSampler(const LazyDigraph& g, std::uint64_t horizon);

    GibbsPrefixSample sample(std::size_t k, RngStream& rng);

  private:
    struct StackSlot {
        std::uint32_t epoch = 0;
        std::vector<OutEdge> order;  // front = top; the arboretum edge sits last
        std::size_t pos = 0;
    };

    const LazyDigraph& g_;
    std::uint64_t horizon_;
    WilsonInfinitySampler wilson_;
    std::vector<StackSlot> stacks_;  // by dense index
    std::uint32_t epoch_ = 0;
    std::size_t certified_depth_ = 0;
};

GibbsPrefixSample sample_gibbs_prefix(const LazyDigraph& g, std::size_t k, std::uint64_t horizon,
                                      RngStream& rng);

}  // namespace eulerpath

#endif  // EULERPATH_EULER_HPP
