#ifndef EULERPATH_WILSON_HPP
#define EULERPATH_WILSON_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "eulerpath/arborescence.hpp"
#include "eulerpath/digraph.hpp"
#include "eulerpath/lazy_digraph.hpp"
#include "eulerpath/rng.hpp"

namespace eulerpath {

// Uniform spanning in-arborescence rooted at `root`, grown by loop-erased
// random walks attached in the given vertex order (sorted order when empty;
// the sampled law does not depend on the order).  Throws RootUnreachable if
// some vertex cannot reach the root.
InArboretum wilson_finite(const Digraph& g, VertexId root, const std::vector<VertexId>& order,
                          RngStream& rng);

enum class EdgeFlag {
    Exact,      // edge fixed by a walk that stopped naturally, was forced, or settled early
    Truncated,  // assigned (or left missing) by a walk the horizon cut off
};

// The portion of a wired uniform arboretum revealed so far on a lazy graph.
// Every covered vertex has a flag; all but walk tips also carry an edge.
struct PartialArboretum {
    std::map<VertexId, EdgeId> edge_of;
    std::map<VertexId, EdgeFlag> flags;
    std::uint64_t horizon = 0;

    bool covered(VertexId v) const { return flags.count(v) != 0; }
};

// Incremental sampler for the arboretum rooted at infinity.  Walks are run
// until they hit the portion already revealed; a walk still running after
// `horizon` steps is cut off and its loop-erasure kept with flags:
//
//   Exact      the walk stopped naturally (or died at a sink), or the vertex
//              has a single out-edge so no continuation could change the
//              choice, or the vertex was last exited in the first half of
//              the horizon and the walk never came back - strong evidence,
//              though not proof, that the edge had settled;
//   Truncated  everything else, including the cut-off walk's final vertex,
//              which stays covered but edgeless until a later walk extends it.
//
// One sampler instance can be reused across many independent samples via
// reset(), which drops the arboretum but keeps graph caches warm.  Instances
// are not thread-safe; use one per thread.
class WilsonInfinitySampler {
  public:
    explicit WilsonInfinitySampler(const LazyDigraph& g) : g_(g) {}

    const LazyDigraph& graph() const { return g_; }

    // Forget the arboretum; adjacency caches survive.
    void reset();

    // Grow the arboretum until `seed` is covered (and carries an edge unless
    // the horizon struck first).
    void extend(VertexId seed, std::uint64_t horizon, RngStream& rng);

    bool covered(VertexId v) const;
    std::optional<EdgeId> edge_at(VertexId v) const;
    std::optional<VertexId> edge_head_at(VertexId v) const;
    std::optional<EdgeFlag> flag_at(VertexId v) const;

    // The revealed portion as value maps (sorted by vertex id).
    PartialArboretum snapshot(std::uint64_t horizon) const;

    // Cached adjacency lookup shared by all walks of this sampler.
    const std::vector<OutEdge>& out_of(VertexId v);

  private:
    struct Slot {
        std::uint32_t cover_epoch = 0;
        std::uint32_t walk_epoch = 0;
        bool has_edge = false;
        EdgeFlag flag = EdgeFlag::Truncated;
        EdgeId edge = 0;
        VertexId edge_head = 0;
        EdgeId next_edge = 0;  // walk scratch: last departure
        VertexId next_head = 0;
        std::uint64_t last_exit = 0;
    };

    Slot& slot(std::size_t index);
    const Slot* slot_if_valid(VertexId v) const;

    const LazyDigraph& g_;
    std::vector<Slot> slots_;                          // by dense index
    std::vector<const std::vector<OutEdge>*> adj_;     // by dense index, epoch-independent
    std::vector<std::size_t> covered_indices_;         // this epoch's cover
    std::uint32_t epoch_ = 1;
    std::uint32_t walk_counter_ = 0;
};

// One-shot convenience: cover all seeds in order and return the snapshot.
PartialArboretum wilson_infinity(const LazyDigraph& g, const std::vector<VertexId>& seeds,
                                 std::uint64_t horizon, RngStream& rng);

// Uniform spanning in-arborescence of the finite window G_n* rooted at its
// boundary vertex; the reference law the infinite-rooted sampler must match
// on any fixed window as n grows.
InArboretum sample_ua_exhaustion(const ContractedDigraph& window, RngStream& rng);
InArboretum sample_ua_exhaustion(const LazyDigraph& g, std::size_t n, RngStream& rng);

}  // namespace eulerpath

#endif  // EULERPATH_WILSON_HPP
