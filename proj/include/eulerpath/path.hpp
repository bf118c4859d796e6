#ifndef EULERPATH_PATH_HPP
#define EULERPATH_PATH_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "eulerpath/digraph.hpp"

namespace eulerpath {

// Finite directed path: vertices.size() == edges.size() + 1; edges[i] goes
// from vertices[i] to vertices[i+1].  A single-vertex path has no edges.
struct Path {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    VertexId start() const { return vertices.front(); }
    VertexId end() const { return vertices.back(); }
    std::size_t length() const { return edges.size(); }

    friend bool operator==(const Path& a, const Path& b) {
        return a.vertices == b.vertices && a.edges == b.edges;
    }
};

// Throws Error unless p is non-empty, alternates correctly, and every edge's
// endpoints in g match the neighbouring vertices.
void validate_path(const Digraph& g, const Path& p);

// Chronological loop erasure.  Scanning from the start, each vertex's loops
// are removed by jumping to its last visit, and the edge kept into the next
// retained vertex is the edge of final departure.  The result is
// self-avoiding and the operation is idempotent.
Path loop_erase(const Path& p);

// Per-vertex stacks of out-edges; stacks[v].front() is the top of v's stack.
using StackConfiguration = std::map<VertexId, std::vector<EdgeId>>;

// Stack of each vertex lists the path's departures in crossing order (first
// departure on top), so following the stacks replays the path.
StackConfiguration stacks_of_path(const Path& p);

struct FollowResult {
    Path path;
    bool step_cap_hit;  // walk was cut off by step_cap rather than by an empty stack
};

// Deterministically trace the stack configuration from `start`: repeatedly
// pop the top of the current vertex's stack and cross that edge, halting
// when the stack at the current vertex is exhausted (or absent).
FollowResult follow_stacks(const Digraph& g, VertexId start, const StackConfiguration& stacks,
                           std::uint64_t step_cap = 1000000);

}  // namespace eulerpath

#endif  // EULERPATH_PATH_HPP
