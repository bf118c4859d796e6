#ifndef EULERPATH_WALKS_HPP
#define EULERPATH_WALKS_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <set>

#include "eulerpath/arborescence.hpp"
#include "eulerpath/digraph.hpp"
#include "eulerpath/lazy_digraph.hpp"
#include "eulerpath/path.hpp"
#include "eulerpath/rng.hpp"

namespace eulerpath {

// A walk stops as soon as its position satisfies `hit` (checked at the start
// too), runs out of moves, or has taken `horizon` steps.
struct StopRule {
    std::function<bool(VertexId)> hit;
    std::uint64_t horizon;
};

// The three stock stopping rules: absorb on entering S, walk exactly k
// steps, or stop on first leaving S.
StopRule hit_set(std::set<VertexId> s,
                 std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max());
StopRule fixed_length(std::uint64_t k);
StopRule leave_set(std::set<VertexId> s,
                   std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max());

enum class WalkStop {
    HitTarget,
    HorizonReached,
    DeadEnd,  // reached a vertex with no out-edges
};

struct WalkResult {
    Path path;
    WalkStop stop;
};

// Simple random walk: each step crosses a uniformly chosen out-edge, so a
// parallel edge is taken with multiplicity.
WalkResult random_walk(const Digraph& g, VertexId start, const StopRule& rule, RngStream& rng);
WalkResult random_walk(const LazyDigraph& g, VertexId start, const StopRule& rule, RngStream& rng);

// The edge of final departure from every visited vertex except the last one,
// which roots the arboretum and carries no edge.  Cover = visited vertices.
InArboretum last_exit_arboretum(const Path& p);

struct ReturnEstimate {
    double estimate;        // fraction of walks that revisited the start within the horizon
    double half_width_99;   // 99% normal-approximation confidence half-width
    std::uint64_t samples;
    std::uint64_t horizon;
    std::uint64_t returned;
    std::uint64_t horizon_hits;  // walks cut off undecided; counted as non-returning
};

// Monte Carlo estimate of the probability that a walk started at `origin`
// ever returns to it (a horizon-cut undecided walk counts as non-returning,
// so the estimate is nondecreasing in the horizon).  Walk i draws from
// stream (seed, i), which makes the result independent of how a caller
// chunks the sample loop.
ReturnEstimate estimate_return_probability(const LazyDigraph& g, VertexId origin,
                                           std::uint64_t samples, std::uint64_t horizon,
                                           std::uint64_t seed);
ReturnEstimate estimate_return_probability(const Digraph& g, VertexId origin,
                                           std::uint64_t samples, std::uint64_t horizon,
                                           std::uint64_t seed);

}  // namespace eulerpath

#endif  // EULERPATH_WALKS_HPP
