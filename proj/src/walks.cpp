#include "eulerpath/walks.hpp"

#include "eulerpath/stats.hpp"

namespace eulerpath {

namespace {

// Shared walk loop; OutEdgesOf yields the sorted out-edge list for a vertex
// as (edge id, head) pairs.
template <typename OutEdgesOf>
WalkResult walk_impl(VertexId start, const StopRule& rule, RngStream& rng,
                     OutEdgesOf&& out_edges_of) {
    Path path;
    path.vertices.push_back(start);
    VertexId at = start;
    if (rule.hit && rule.hit(at)) return {std::move(path), WalkStop::HitTarget};
    for (std::uint64_t step = 0; step < rule.horizon; ++step) {
        const auto& out = out_edges_of(at);
        if (out.empty()) return {std::move(path), WalkStop::DeadEnd};
        const auto& e = out[static_cast<std::size_t>(rng.below(out.size()))];
        at = e.head;
        path.edges.push_back(e.id);
        path.vertices.push_back(at);
        if (rule.hit && rule.hit(at)) return {std::move(path), WalkStop::HitTarget};
    }
    return {std::move(path), WalkStop::HorizonReached};
}

}  // namespace

StopRule hit_set(std::set<VertexId> s, std::uint64_t max_steps) {
    return {[s = std::move(s)](VertexId v) { return s.count(v) != 0; }, max_steps};
}

StopRule fixed_length(std::uint64_t k) { return {nullptr, k}; }

StopRule leave_set(std::set<VertexId> s, std::uint64_t max_steps) {
    return {[s = std::move(s)](VertexId v) { return s.count(v) == 0; }, max_steps};
}

WalkResult random_walk(const Digraph& g, VertexId start, const StopRule& rule, RngStream& rng) {
    // Adapt edge-id adjacency to (id, head) pairs once per vertex.
    std::vector<std::vector<OutEdge>> cache(g.vertex_count());
    std::vector<bool> cached(g.vertex_count(), false);
    return walk_impl(start, rule, rng, [&](VertexId v) -> const std::vector<OutEdge>& {
        const std::size_t i = g.index_of(v);
        if (!cached[i]) {
            for (EdgeId e : g.out_edges(v)) cache[i].push_back({e, g.head(e)});
            cached[i] = true;
        }
        return cache[i];
    });
}

WalkResult random_walk(const LazyDigraph& g, VertexId start, const StopRule& rule,
                       RngStream& rng) {
    return walk_impl(start, rule, rng,
                     [&](VertexId v) -> const std::vector<OutEdge>& { return g.out_edges(v); });
}

InArboretum last_exit_arboretum(const Path& p) {
    if (p.vertices.empty()) throw Error("cannot take last exits of an empty path");
    InArboretum a;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        a.cover.insert(p.vertices[i]);
        a.edge_of[p.vertices[i]] = p.edges[i];  // later departures overwrite earlier ones
    }
    a.cover.insert(p.vertices.back());
    a.edge_of.erase(p.vertices.back());  // the final vertex roots the arboretum
    return a;
}

namespace {

template <typename OutEdgesOf>
ReturnEstimate estimate_return_impl(VertexId origin, std::uint64_t samples, std::uint64_t horizon,
                                    std::uint64_t seed, OutEdgesOf&& out_of) {
    std::uint64_t returned = 0;
    std::uint64_t horizon_hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        RngStream rng = make_stream(seed, i);
        VertexId at = origin;
        bool came_back = false;
        bool undecided = true;
        for (std::uint64_t step = 0; step < horizon; ++step) {
            const auto& out = out_of(at);
            if (out.empty()) {
                undecided = false;  // stuck forever; definitely no return
                break;
            }
            at = out[static_cast<std::size_t>(rng.below(out.size()))].head;
            if (at == origin) {
                came_back = true;
                undecided = false;
                break;
            }
        }
        if (came_back) {
            ++returned;
        } else if (undecided) {
            ++horizon_hits;  // counted as non-returning
        }
    }

    const double estimate =
        samples == 0 ? 0.0 : static_cast<double>(returned) / static_cast<double>(samples);
    return ReturnEstimate{estimate, normal99_half_width(estimate, samples), samples, horizon,
                          returned, horizon_hits};
}

}  // namespace

ReturnEstimate estimate_return_probability(const LazyDigraph& g, VertexId origin,
                                           std::uint64_t samples, std::uint64_t horizon,
                                           std::uint64_t seed) {
    // Adjacency pointers cached by dense index; they stay valid across
    // samples, so the memoization lock is hit once per vertex, not per step.
    std::vector<const std::vector<OutEdge>*> adj;
    return estimate_return_impl(origin, samples, horizon, seed,
                                [&](VertexId v) -> const std::vector<OutEdge>& {
                                    const std::size_t i = g.dense_index(v);
                                    if (i >= adj.size()) adj.resize(i + 1, nullptr);
                                    if (!adj[i]) adj[i] = &g.out_edges(v);
                                    return *adj[i];
                                });
}

ReturnEstimate estimate_return_probability(const Digraph& g, VertexId origin,
                                           std::uint64_t samples, std::uint64_t horizon,
                                           std::uint64_t seed) {
    std::vector<std::vector<OutEdge>> adj(g.vertex_count());
    std::vector<bool> ready(g.vertex_count(), false);
    return estimate_return_impl(origin, samples, horizon, seed,
                                [&](VertexId v) -> const std::vector<OutEdge>& {
                                    const std::size_t i = g.index_of(v);
                                    if (!ready[i]) {
                                        for (EdgeId e : g.out_edges(v)) adj[i].push_back({e, g.head(e)});
                                        ready[i] = true;
                                    }
                                    return adj[i];
                                });
}

}  // namespace eulerpath
