#ifndef EULERPATH_LAZY_DIGRAPH_HPP
#define EULERPATH_LAZY_DIGRAPH_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "eulerpath/digraph.hpp"

namespace eulerpath {

struct OutEdge {
    EdgeId id;
    VertexId head;
};

// A possibly infinite, locally finite digraph revealed through oracles:
// out-edges and in-degree per vertex, plus an optional exhaustion oracle
// giving an increasing sequence of finite vertex sets V_1 ⊆ V_2 ⊆ ... whose
// union is the whole vertex set.  Oracle answers are memoized; repeated
// queries never hit the oracle twice, so a well-behaved oracle makes the
// graph observationally immutable.  Memoization is synchronized; the dense
// vertex indices handed out are session-local scratch keys (first-touch
// order), not part of any serialized output.
class LazyDigraph {
  public:
    using OutEdgesOracle = std::function<std::vector<OutEdge>(VertexId)>;
    using InDegreeOracle = std::function<std::size_t(VertexId)>;
    using ExhaustionOracle = std::function<std::vector<VertexId>(std::size_t)>;

    LazyDigraph(VertexId source, OutEdgesOracle out_edges, InDegreeOracle in_degree,
                ExhaustionOracle exhaustion = nullptr);

    VertexId source() const { return source_; }

    // Memoized; the returned list is sorted by edge id and its reference
    // stays valid for the lifetime of the graph.
    const std::vector<OutEdge>& out_edges(VertexId v) const;
    std::size_t out_degree(VertexId v) const { return out_edges(v).size(); }
    std::size_t in_degree(VertexId v) const;

    bool has_exhaustion() const { return static_cast<bool>(exhaustion_oracle_); }
    // Sorted copy of V_n.  Verifies V_n ⊆ V_m for all memoized m > n and
    // throws OracleInconsistency when nesting fails.
    std::vector<VertexId> exhaustion(std::size_t n) const;

    // Dense first-touch index for v; grows the registry as needed.
    std::size_t dense_index(VertexId v) const;
    VertexId vertex_at(std::size_t index) const;
    std::size_t seen_count() const;

    // Re-query the raw oracle for v and compare with the memoized answer.
    // Throws OracleInconsistency if the oracle changed its mind.
    void recheck(VertexId v) const;

  private:
    std::vector<OutEdge> query_out(VertexId v) const;
    std::size_t ensure_registered(VertexId v) const;

    VertexId source_;
    OutEdgesOracle out_oracle_;
    InDegreeOracle in_oracle_;
    ExhaustionOracle exhaustion_oracle_;

    mutable std::mutex mutex_;
    mutable std::unordered_map<VertexId, std::size_t> dense_;
    mutable std::vector<VertexId> by_index_;
    // Deques keep references stable while memo tables grow.
    mutable std::deque<std::optional<std::vector<OutEdge>>> out_memo_;
    mutable std::deque<std::optional<std::size_t>> in_memo_;
    mutable std::unordered_map<EdgeId, std::pair<VertexId, VertexId>> edge_registry_;
    mutable std::map<std::size_t, std::vector<VertexId>> exhaustion_memo_;
};

// Built-in family: vertices 0,1,2,...; p parallel edges n -> n+1 and q
// parallel edges n+1 -> n for every level n; source 0.  Edge ids: the level-n
// block occupies [(p+q)·n, (p+q)·(n+1)): first the p forward edges n -> n+1,
// then (for n >= 1) the q backward edges n -> n-1.  Requires p >= 1.
LazyDigraph ladder_family(unsigned p, unsigned q);

// Heap-allocated variant; LazyDigraph itself is immovable (it owns a mutex),
// so callers that need ownership indirection use this.
std::shared_ptr<LazyDigraph> ladder_family_shared(unsigned p, unsigned q);

struct SourcedEulerianCertificate {
    bool pass;
    std::size_t depth;                     // vertices within this out-distance of the source were checked
    std::optional<DegreeWitness> witness;  // present iff !pass
};

// Bounded-depth degree check for the sourced Eulerian property on a lazy
// graph: out(o) = in(o) + 1 and out(v) = in(v) elsewhere, verified for every
// vertex within out-edge distance `depth` of the source.  Each explored
// vertex is also rechecked against the raw oracle.
SourcedEulerianCertificate classify_sourced_eulerian_prefix(const LazyDigraph& g,
                                                            std::size_t depth);

struct ContractedDigraph {
    Digraph graph;      // vertices V_n plus the boundary; source o, sink = boundary
    VertexId boundary;  // fresh id, one past the largest id met while scanning
    std::size_t depth;  // the n of V_n
};

// Finite window G_n*: keep V_n, merge everything outside into a single
// boundary vertex, drop edges with both endpoints outside.  Edges keep their
// original ids, so paths in the window are directly comparable with paths in
// the full graph.  In-edges of V_n from outside are discovered by scanning
// out-edges over growing exhaustion sets until the counts match the
// in-degree oracle on all of V_n.
ContractedDigraph contract_boundary(const LazyDigraph& g, std::size_t n);

}  // namespace eulerpath

#endif  // EULERPATH_LAZY_DIGRAPH_HPP
