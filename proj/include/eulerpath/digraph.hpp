#ifndef EULERPATH_DIGRAPH_HPP
#define EULERPATH_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "eulerpath/errors.hpp"

namespace eulerpath {

using VertexId = std::uint64_t;
using EdgeId = std::uint64_t;

struct EdgeSpec {
    EdgeId id;
    VertexId tail;
    VertexId head;
};

// Finite directed multigraph with a distinguished source and optional sink.
// Parallel edges and self-loops are first-class; every edge carries a unique
// id and all adjacency lists are sorted by edge id, so iteration order is a
// function of the edge set alone.  Instances are immutable after
// construction and safe to share across threads.
class Digraph {
  public:
    Digraph(std::vector<EdgeSpec> edges, VertexId source,
            std::optional<VertexId> sink = std::nullopt);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<EdgeId>& edge_ids() const { return edge_ids_; }

    bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
    std::size_t index_of(VertexId v) const;
    VertexId vertex_at(std::size_t i) const { return vertices_[i]; }

    VertexId tail(EdgeId e) const { return spec(e).tail; }
    VertexId head(EdgeId e) const { return spec(e).head; }
    const EdgeSpec& spec(EdgeId e) const;

    const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[index_of(v)]; }
    const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[index_of(v)]; }
    std::size_t out_degree(VertexId v) const { return out_[index_of(v)].size(); }
    std::size_t in_degree(VertexId v) const { return in_[index_of(v)].size(); }

    VertexId source() const { return source_; }
    std::optional<VertexId> sink() const { return sink_; }

  private:
    std::vector<VertexId> vertices_;                    // sorted
    std::unordered_map<VertexId, std::size_t> index_;   // vertex -> dense index
    std::unordered_map<EdgeId, EdgeSpec> edges_;
    std::vector<EdgeId> edge_ids_;                      // sorted
    std::vector<std::vector<EdgeId>> out_;              // by dense index, sorted
    std::vector<std::vector<EdgeId>> in_;
    VertexId source_;
    std::optional<VertexId> sink_;
};

// Convenience factory mirroring the constructor; validates edge-id
// uniqueness and non-emptiness and throws DuplicateEdgeId / EmptyGraph.
Digraph build_digraph(std::vector<EdgeSpec> edges, VertexId source,
                      std::optional<VertexId> sink = std::nullopt);

enum class EulerianKind {
    FiniteSourceSink,   // o != z, path case
    FiniteCircuitRoot,  // o == z, circuit case
    InfiniteSourced,    // produced only by the lazy prefix classifier
    NotEulerian,
};

struct EulerianClassification {
    EulerianKind kind;
    VertexId start;
    VertexId end;  // equals start in the circuit case
    std::optional<DegreeWitness> witness;  // present iff NotEulerian
};

// Decide whether the digraph carries an Eulerian path from its source to its
// sink (or an Eulerian circuit at the source when no distinct sink is given).
// Degree conditions: in the path case out(o) = in(o)+1, in(z) = out(z)+1 and
// every other vertex is balanced; in the circuit case all vertices are
// balanced.  Connectivity: every vertex must lie on a directed source-to-end
// route.  On failure the witness names a violating vertex with its degrees.
EulerianClassification classify_eulerian(const Digraph& g);

struct CommunicatingClasses {
    // Strongly connected components as sorted vertex lists, listed in a
    // deterministic order (by smallest member).
    std::vector<std::vector<VertexId>> classes;
    bool irreducible;  // true iff there is exactly one class
};

CommunicatingClasses communicating_classes(const Digraph& g);

}  // namespace eulerpath

#endif  // EULERPATH_DIGRAPH_HPP
