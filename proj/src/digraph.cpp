#include "eulerpath/digraph.hpp"

#include <algorithm>
#include <set>

namespace eulerpath {

Digraph::Digraph(std::vector<EdgeSpec> edges, VertexId source, std::optional<VertexId> sink)
    : source_(source), sink_(sink) {
    std::set<VertexId> vertex_set;
    vertex_set.insert(source);
    if (sink) vertex_set.insert(*sink);
    for (const EdgeSpec& e : edges) {
        vertex_set.insert(e.tail);
        vertex_set.insert(e.head);
    }
    if (vertex_set.empty()) throw EmptyGraph();

    vertices_.assign(vertex_set.begin(), vertex_set.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = i;

    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (const EdgeSpec& e : edges) {
        if (!edges_.emplace(e.id, e).second) throw DuplicateEdgeId(e.id);
        edge_ids_.push_back(e.id);
        out_[index_.at(e.tail)].push_back(e.id);
        in_[index_.at(e.head)].push_back(e.id);
    }
    std::sort(edge_ids_.begin(), edge_ids_.end());
    for (auto& adj : out_) std::sort(adj.begin(), adj.end());
    for (auto& adj : in_) std::sort(adj.begin(), adj.end());
}

std::size_t Digraph::index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw UnknownVertex(v);
    return it->second;
}

const EdgeSpec& Digraph::spec(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw UnknownEdge(e);
    return it->second;
}

Digraph build_digraph(std::vector<EdgeSpec> edges, VertexId source, std::optional<VertexId> sink) {
    return Digraph(std::move(edges), source, sink);
}

namespace {

// Vertices reachable from `start` following edges forward (or backward).
std::vector<bool> reachable(const Digraph& g, VertexId start, bool forward) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack{start};
    seen[g.index_of(start)] = true;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        const auto& adj = forward ? g.out_edges(v) : g.in_edges(v);
        for (EdgeId e : adj) {
            const VertexId w = forward ? g.head(e) : g.tail(e);
            const std::size_t wi = g.index_of(w);
            if (!seen[wi]) {
                seen[wi] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

EulerianClassification classify_eulerian(const Digraph& g) {
    const VertexId o = g.source();
    const VertexId z = (g.sink() && *g.sink() != o) ? *g.sink() : o;
    const bool circuit = (z == o);

    auto fail = [&](VertexId v) {
        return EulerianClassification{EulerianKind::NotEulerian, o, z,
                                      DegreeWitness{v, g.in_degree(v), g.out_degree(v)}};
    };

    for (VertexId v : g.vertices()) {
        const std::size_t din = g.in_degree(v);
        const std::size_t dout = g.out_degree(v);
        if (circuit || (v != o && v != z)) {
            if (din != dout) return fail(v);
        } else if (v == o) {
            if (dout != din + 1) return fail(v);
        } else {  // v == z
            if (din != dout + 1) return fail(v);
        }
    }

    // Every vertex must lie on some o -> z route.
    const std::vector<bool> from_o = reachable(g, o, /*forward=*/true);
    const std::vector<bool> to_z = reachable(g, z, /*forward=*/false);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (!from_o[i] || !to_z[i]) return fail(g.vertex_at(i));
    }

    return EulerianClassification{
        circuit ? EulerianKind::FiniteCircuitRoot : EulerianKind::FiniteSourceSink, o, z,
        std::nullopt};
}

namespace {

// Iterative Tarjan SCC; recursion is avoided so deep graphs cannot overflow
// the call stack.
struct TarjanState {
    const Digraph& g;
    std::vector<std::size_t> index, lowlink;
    std::vector<bool> on_stack;
    std::vector<std::size_t> scc_of;
    std::vector<std::size_t> stack;
    std::size_t next_index = 0;
    std::size_t scc_count = 0;
    static constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

    explicit TarjanState(const Digraph& g)
        : g(g),
          index(g.vertex_count(), kUnvisited),
          lowlink(g.vertex_count(), 0),
          on_stack(g.vertex_count(), false),
          scc_of(g.vertex_count(), kUnvisited) {}

    void run(std::size_t root) {
        struct Frame {
            std::size_t v;
            std::size_t edge_pos;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& adj = g.out_edges(g.vertex_at(f.v));
            if (f.edge_pos < adj.size()) {
                const std::size_t w = g.index_of(g.head(adj[f.edge_pos++]));
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    std::size_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        scc_of[w] = scc_count;
                    } while (w != f.v);
                    ++scc_count;
                }
                const std::size_t v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
                }
            }
        }
    }
};

}  // namespace

CommunicatingClasses communicating_classes(const Digraph& g) {
    TarjanState state(g);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (state.index[i] == TarjanState::kUnvisited) state.run(i);
    }
    std::vector<std::vector<VertexId>> classes(state.scc_count);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        classes[state.scc_of[i]].push_back(g.vertex_at(i));
    }
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return CommunicatingClasses{std::move(classes), state.scc_count == 1};
}

}  // namespace eulerpath
