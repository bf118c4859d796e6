#include "eulerpath/wilson.hpp"

#include <algorithm>
#include <string>

namespace eulerpath {

InArboretum wilson_finite(const Digraph& g, VertexId root, const std::vector<VertexId>& order,
                          RngStream& rng) {
    const std::size_t n = g.vertex_count();
    const std::size_t root_idx = g.index_of(root);

    // Every vertex must reach the root or some walk would wander forever.
    {
        std::vector<bool> reaches(n, false);
        std::vector<VertexId> stack{root};
        reaches[root_idx] = true;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.in_edges(v)) {
                const std::size_t ti = g.index_of(g.tail(e));
                if (!reaches[ti]) {
                    reaches[ti] = true;
                    stack.push_back(g.tail(e));
                }
            }
        }
        for (VertexId v : g.vertices()) {
            if (!reaches[g.index_of(v)]) throw RootUnreachable(v);
        }
    }

    std::vector<VertexId> seeds = order.empty() ? g.vertices() : order;
    if (!order.empty()) {
        std::vector<VertexId> sorted_order(order);
        std::sort(sorted_order.begin(), sorted_order.end());
        if (sorted_order != g.vertices()) {
            throw Error("vertex order must be a permutation of the vertex set");
        }
    }

    // (id, head) adjacency built once per vertex on first touch.
    std::vector<std::vector<OutEdge>> adj(n);
    std::vector<bool> adj_ready(n, false);
    auto out_of = [&](std::size_t i) -> const std::vector<OutEdge>& {
        if (!adj_ready[i]) {
            for (EdgeId e : g.out_edges(g.vertex_at(i))) adj[i].push_back({e, g.head(e)});
            adj_ready[i] = true;
        }
        return adj[i];
    };

    std::vector<bool> in_tree(n, false);
    std::vector<EdgeId> next_edge(n, 0);
    std::vector<std::size_t> next_head(n, 0);
    in_tree[root_idx] = true;

    InArboretum a;
    a.cover.insert(g.vertices().begin(), g.vertices().end());
    for (VertexId seed : seeds) {
        // Random walk until the tree is hit; the pointers that survive are
        // each vertex's final departure, i.e. the loop-erased attachment.
        std::size_t at = g.index_of(seed);
        while (!in_tree[at]) {
            const auto& out = out_of(at);
            const OutEdge& e = out[static_cast<std::size_t>(rng.below(out.size()))];
            next_edge[at] = e.id;
            next_head[at] = g.index_of(e.head);
            at = next_head[at];
        }
        at = g.index_of(seed);
        while (!in_tree[at]) {
            in_tree[at] = true;
            a.edge_of[g.vertex_at(at)] = next_edge[at];
            at = next_head[at];
        }
    }
    return a;
}

void WilsonInfinitySampler::reset() {
    ++epoch_;
    covered_indices_.clear();
}

WilsonInfinitySampler::Slot& WilsonInfinitySampler::slot(std::size_t index) {
    if (index >= slots_.size()) slots_.resize(index + 1);
    return slots_[index];
}

const std::vector<OutEdge>& WilsonInfinitySampler::out_of(VertexId v) {
    const std::size_t i = g_.dense_index(v);
    if (i >= adj_.size()) adj_.resize(i + 1, nullptr);
    if (!adj_[i]) adj_[i] = &g_.out_edges(v);
    return *adj_[i];
}

const WilsonInfinitySampler::Slot* WilsonInfinitySampler::slot_if_valid(VertexId v) const {
    const std::size_t i = g_.dense_index(v);
    if (i >= slots_.size()) return nullptr;
    const Slot& s = slots_[i];
    return s.cover_epoch == epoch_ ? &s : nullptr;
}

bool WilsonInfinitySampler::covered(VertexId v) const { return slot_if_valid(v) != nullptr; }

std::optional<EdgeId> WilsonInfinitySampler::edge_at(VertexId v) const {
    const Slot* s = slot_if_valid(v);
    if (!s || !s->has_edge) return std::nullopt;
    return s->edge;
}

std::optional<VertexId> WilsonInfinitySampler::edge_head_at(VertexId v) const {
    const Slot* s = slot_if_valid(v);
    if (!s || !s->has_edge) return std::nullopt;
    return s->edge_head;
}

std::optional<EdgeFlag> WilsonInfinitySampler::flag_at(VertexId v) const {
    const Slot* s = slot_if_valid(v);
    if (!s) return std::nullopt;
    return s->flag;
}

void WilsonInfinitySampler::extend(VertexId seed, std::uint64_t horizon, RngStream& rng) {
    const std::size_t seed_idx = g_.dense_index(seed);
    {
        const Slot& s = slot(seed_idx);
        if (s.cover_epoch == epoch_ && s.has_edge) return;
    }
    const std::uint32_t walk_id = ++walk_counter_;

    // Walk until the revealed arboretum is hit (a covered vertex other than
    // the seed itself, which may be covered but edgeless), the graph dies
    // out, or the horizon strikes.
    VertexId at = seed;
    std::size_t at_idx = seed_idx;
    std::uint64_t steps = 0;
    bool natural = false;
    bool dead = false;
    while (steps < horizon) {
        const auto& out = out_of(at);
        if (out.empty()) {
            dead = true;
            break;
        }
        ++steps;
        const OutEdge& e = out[static_cast<std::size_t>(rng.below(out.size()))];
        Slot& s = slot(at_idx);
        s.walk_epoch = walk_id;
        s.next_edge = e.id;
        s.next_head = e.head;
        s.last_exit = steps;
        at = e.head;
        at_idx = g_.dense_index(at);
        const Slot& t = slot(at_idx);
        if (t.cover_epoch == epoch_ && at != seed) {
            natural = true;
            break;
        }
    }
    const VertexId terminal = at;

    // Retrace the surviving pointers from the seed: that is exactly the
    // loop-erased walk, ending at the terminal vertex.
    VertexId v = seed;
    std::size_t v_idx = seed_idx;
    std::uint64_t jumps = 0;
    while (v != terminal) {
        Slot& s = slot(v_idx);
        if (s.walk_epoch != walk_id || ++jumps > steps + 1) {
            throw Error("loop-erasure retrace left the walk, which cannot happen");
        }
        if (s.cover_epoch != epoch_) {
            s.cover_epoch = epoch_;
            covered_indices_.push_back(v_idx);
        }
        s.has_edge = true;
        s.edge = s.next_edge;
        s.edge_head = s.next_head;
        if (natural || dead) {
            s.flag = EdgeFlag::Exact;
        } else if (out_of(v).size() == 1) {
            s.flag = EdgeFlag::Exact;  // forced choice, no continuation can revise it
        } else {
            s.flag = (2 * s.last_exit <= horizon) ? EdgeFlag::Exact : EdgeFlag::Truncated;
        }
        v = s.edge_head;
        v_idx = g_.dense_index(v);
    }
    if (!natural) {
        // Dead ends provably have no edge; horizon cut-offs are left as
        // edgeless tips to be extended by a later walk.
        Slot& s = slot(v_idx);
        if (s.cover_epoch != epoch_) {
            s.cover_epoch = epoch_;
            covered_indices_.push_back(v_idx);
            s.has_edge = false;
        }
        if (!s.has_edge) s.flag = dead ? EdgeFlag::Exact : EdgeFlag::Truncated;
    }
}

PartialArboretum WilsonInfinitySampler::snapshot(std::uint64_t horizon) const {
    PartialArboretum pa;
    pa.horizon = horizon;
    for (std::size_t i : covered_indices_) {
        const VertexId v = g_.vertex_at(i);
        const Slot& s = slots_[i];
        pa.flags[v] = s.flag;
        if (s.has_edge) pa.edge_of[v] = s.edge;
    }
    return pa;
}

PartialArboretum wilson_infinity(const LazyDigraph& g, const std::vector<VertexId>& seeds,
                                 std::uint64_t horizon, RngStream& rng) {
    WilsonInfinitySampler sampler(g);
    for (VertexId seed : seeds) sampler.extend(seed, horizon, rng);
    return sampler.snapshot(horizon);
}

InArboretum sample_ua_exhaustion(const ContractedDigraph& window, RngStream& rng) {
    return wilson_finite(window.graph, window.boundary, {}, rng);
}

InArboretum sample_ua_exhaustion(const LazyDigraph& g, std::size_t n, RngStream& rng) {
    const ContractedDigraph window = contract_boundary(g, n);
    return sample_ua_exhaustion(window, rng);
}

}  // namespace eulerpath
