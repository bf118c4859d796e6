#ifndef EULERPATH_ARBORESCENCE_HPP
#define EULERPATH_ARBORESCENCE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eulerpath/digraph.hpp"

namespace eulerpath {

using BigInt = boost::multiprecision::cpp_int;

// An in-arboretum assigns to each covered non-root vertex a single out-edge;
// following assigned edges flows toward the root (finite case) or toward
// infinity (one edge per vertex, no cycles).  `cover` is the covered vertex
// set: the domain of edge_of plus any rootlike vertices carrying no edge.
struct InArboretum {
    std::map<VertexId, EdgeId> edge_of;
    std::set<VertexId> cover;
};

// Checks whether `edges` is a spanning in-arborescence of g rooted at
// `root`: out-degree one inside the set at every non-root vertex, zero at
// the root, and every vertex reaching the root.  Returns nullopt when the
// check passes, otherwise a witness vertex violating one of the conditions.
std::optional<VertexId> validate_in_arborescence(const Digraph& g, const std::set<EdgeId>& edges,
                                                 VertexId root);
std::optional<VertexId> validate_in_arborescence(const Digraph& g, const InArboretum& a,
                                                 VertexId root);

// The arboretum's edge ids as a plain set.
std::set<EdgeId> edge_set(const InArboretum& a);

struct PastResult {
    std::set<VertexId> vertices;  // partial when bound_exceeded
    bool bound_exceeded;
};

// The past of v: covered vertices whose arboretum path passes through v
// (including v itself).  Collection stops once more than `bound` vertices
// accumulate.  The head resolver maps an edge id to its head, which lets
// callers run this on arboreta of graphs that exist only through oracles.
PastResult past(const InArboretum& a, const std::function<VertexId(EdgeId)>& head, VertexId v,
                std::size_t bound);
PastResult past(const InArboretum& a, const Digraph& g, VertexId v, std::size_t bound);

struct OneEndedReport {
    std::size_t checked;
    std::size_t finite_pasts;
    std::vector<VertexId> unbounded;  // sample vertices whose past exceeded the bound
    std::size_t bound;
    bool one_ended_evidence() const { return unbounded.empty(); }
};

// Evidence check that every sampled vertex has finite past under `a`.
OneEndedReport check_one_ended(const InArboretum& a, const std::function<VertexId(EdgeId)>& head,
                               const std::vector<VertexId>& sample, std::size_t bound);

// All spanning in-arborescences of g rooted at `root`, by exhaustive search
// over per-vertex out-edge choices.  Throws CapExceeded when more than `cap`
// arborescences exist.
std::vector<InArboretum> enumerate_in_arborescences(const Digraph& g, VertexId root,
                                                    std::uint64_t cap);

// Exact count of spanning in-arborescences rooted at `root` via the directed
// matrix-tree theorem: the determinant of the out-degree Laplacian with the
// root's row and column removed, evaluated fraction-free over big integers.
BigInt count_in_arborescences(const Digraph& g, VertexId root);

}  // namespace eulerpath

#endif  // EULERPATH_ARBORESCENCE_HPP
