#include "eulerpath/euler.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace eulerpath {

namespace {

BigInt factorial_big(std::size_t n) {
    BigInt r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

// Iterative backtracking over all Eulerian start->end trails; calls visit()
// with the completed path (reused buffer - copy if kept).  Depth is bounded
// by the edge count, so no recursion.
template <typename Visit>
void for_each_eulerian_path(const Digraph& g, VertexId start, Visit&& visit) {
    const std::size_t m = g.edge_count();

    std::unordered_map<EdgeId, std::size_t> edge_index;
    edge_index.reserve(m);
    for (std::size_t i = 0; i < m; ++i) edge_index.emplace(g.edge_ids()[i], i);
    std::vector<bool> used(m, false);

    Path path;
    path.vertices.reserve(m + 1);
    path.edges.reserve(m);
    path.vertices.push_back(start);

    std::vector<std::size_t> cursor;  // cursor[d] = next out-edge index to try at depth d
    cursor.reserve(m + 1);
    cursor.push_back(0);

    while (!cursor.empty()) {
        if (path.edges.size() == m) {
            visit(const_cast<const Path&>(path));
            cursor.pop_back();
            if (cursor.empty()) break;
            used[edge_index.at(path.edges.back())] = false;
            path.edges.pop_back();
            path.vertices.pop_back();
            continue;
        }
        const VertexId at = path.vertices.back();
        const std::vector<EdgeId>& out = g.out_edges(at);
        std::size_t& c = cursor.back();
        while (c < out.size() && used[edge_index.at(out[c])]) ++c;
        if (c < out.size()) {
            const EdgeId e = out[c];
            ++c;
            used[edge_index.at(e)] = true;
            path.edges.push_back(e);
            path.vertices.push_back(g.head(e));
            cursor.push_back(0);
        } else {
            cursor.pop_back();
            if (cursor.empty()) break;
            used[edge_index.at(path.edges.back())] = false;
            path.edges.pop_back();
            path.vertices.pop_back();
        }
    }
}

}  // namespace

BigInt count_eulerian_paths(const Digraph& g) {
    const EulerianClassification cls = classify_eulerian(g);
    if (cls.kind == EulerianKind::NotEulerian) throw NotEulerianInput(cls.witness);
    BigInt total = count_in_arborescences(g, cls.end);
    total *= factorial_big(g.out_degree(cls.end));
    for (VertexId v : g.vertices()) {
        if (v == cls.end) continue;
        total *= factorial_big(g.out_degree(v) - 1);
    }
    return total;
}

std::vector<Path> enumerate_eulerian_paths(const Digraph& g, std::uint64_t cap) {
    const EulerianClassification cls = classify_eulerian(g);
    if (cls.kind == EulerianKind::NotEulerian) throw NotEulerianInput(cls.witness);
    std::vector<Path> out;
    for_each_eulerian_path(g, cls.start, [&](const Path& p) {
        if (out.size() >= cap) throw CapExceeded(cap);
        out.push_back(p);
    });
    return out;
}

std::uint64_t count_eulerian_paths_exhaustive(const Digraph& g) {
    const EulerianClassification cls = classify_eulerian(g);
    if (cls.kind == EulerianKind::NotEulerian) throw NotEulerianInput(cls.witness);
    std::uint64_t n = 0;
    for_each_eulerian_path(g, cls.start, [&](const Path&) { ++n; });
    return n;
}

bool is_eulerian_stack(const Digraph& g, VertexId o, VertexId z, const StackConfiguration& s) {
    g.index_of(o);  // validate endpoints up front
    g.index_of(z);

    // Condition 1: each stack is a permutation of its vertex's out-edges, and
    // no stack names a foreign vertex.
    for (const auto& [v, stack] : s) {
        if (!g.has_vertex(v)) return false;
        const std::vector<EdgeId>& out = g.out_edges(v);
        if (stack.size() != out.size()) return false;
        std::vector<EdgeId> sorted = stack;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != out) return false;  // out_edges is sorted by construction
    }
    for (VertexId v : g.vertices()) {
        if (g.out_degree(v) > 0 && s.count(v) == 0) return false;
    }

    // Condition 2: bottom edges away from z form a spanning in-arborescence
    // rooted at z.
    std::set<EdgeId> bottoms;
    for (VertexId v : g.vertices()) {
        if (v == z) continue;
        if (g.out_degree(v) == 0) return false;  // cannot host an arborescence edge
        bottoms.insert(s.at(v).back());
    }
    return !validate_in_arborescence(g, bottoms, z).has_value();
}

Path sample_eulerian_finite(const Digraph& g, RngStream& rng) {
    const EulerianClassification cls = classify_eulerian(g);
    if (cls.kind == EulerianKind::NotEulerian) throw NotEulerianInput(cls.witness);
    const VertexId o = cls.start;
    const VertexId z = cls.end;

    const InArboretum arb = wilson_finite(g, z, {}, rng);

    StackConfiguration stacks;
    for (VertexId v : g.vertices()) {  // ascending order fixes rng consumption
        const std::vector<EdgeId>& out = g.out_edges(v);
        if (out.empty()) continue;
        std::vector<EdgeId> stack;
        stack.reserve(out.size());
        if (v == z) {
            stack = out;
            rng.shuffle(stack);
        } else {
            const EdgeId bottom = arb.edge_of.at(v);
            for (EdgeId e : out) {
                if (e != bottom) stack.push_back(e);
            }
            rng.shuffle(stack);
            stack.push_back(bottom);
        }
        stacks.emplace(v, std::move(stack));
    }

    FollowResult fr = follow_stacks(g, o, stacks, g.edge_count() + 1);
    if (fr.path.edges.size() != g.edge_count() || fr.path.end() != z) {
        throw Error("followed stacks failed to produce an Eulerian path");
    }
    return std::move(fr.path);
}

GibbsPrefixSampler::GibbsPrefixSampler(const LazyDigraph& g, std::uint64_t horizon)
    : g_(g), horizon_(horizon), wilson_(g) {
    if (horizon_ == 0) throw Error("horizon must be positive");
}

GibbsPrefixSample GibbsPrefixSampler::sample(std::size_t k, RngStream& rng) {
    if (k == 0) throw Error("prefix length must be at least 1");
    if (k > certified_depth_) {
        const SourcedEulerianCertificate cert = classify_sourced_eulerian_prefix(g_, k);
        if (!cert.pass) throw NotEulerianInput(cert.witness);
        certified_depth_ = k;
    }

    wilson_.reset();
    ++epoch_;

    GibbsPrefixSample out;
    out.horizon_used = horizon_;
    out.path.vertices.reserve(k + 1);
    out.path.edges.reserve(k);
    out.path.vertices.push_back(g_.source());

    VertexId at = g_.source();
    for (std::size_t step = 0; step < k; ++step) {
        const std::size_t idx = g_.dense_index(at);
        if (idx >= stacks_.size()) stacks_.resize(idx + 1);
        StackSlot& slot = stacks_[idx];
        if (slot.epoch != epoch_) {
            const std::vector<OutEdge>& out_edges = g_.out_edges(at);
            if (out_edges.empty()) {
                throw StackExhausted(step, !out.truncated_stack_vertices.empty());
            }
            // Materialize this vertex's stack: arboretum edge at the bottom.
            // A cut-off walk can leave `at` covered but edgeless; each extra
            // extension is an independent continuation, so retry a few times.
            std::size_t attempts = 0;
            while (!wilson_.edge_at(at).has_value()) {
                wilson_.extend(at, horizon_, rng);
                if (!wilson_.edge_at(at).has_value() && ++attempts >= 64) {
                    throw StackExhausted(step, true);
                }
            }
            const EdgeId bottom = *wilson_.edge_at(at);
            slot.order.clear();
            slot.order.reserve(out_edges.size());
            OutEdge bottom_edge{bottom, 0};
            for (const OutEdge& e : out_edges) {
                if (e.id == bottom) {
                    bottom_edge = e;
                } else {
                    slot.order.push_back(e);
                }
            }
            rng.shuffle(slot.order);
            slot.order.push_back(bottom_edge);
            slot.pos = 0;
            slot.epoch = epoch_;
            if (*wilson_.flag_at(at) == EdgeFlag::Truncated) {
                out.truncated_stack_vertices.push_back(at);
            }
        }
        if (slot.pos >= slot.order.size()) {
            throw StackExhausted(step, !out.truncated_stack_vertices.empty());
        }
        const OutEdge e = slot.order[slot.pos++];
        out.path.edges.push_back(e.id);
        out.path.vertices.push_back(e.head);
        at = e.head;
    }

    std::sort(out.truncated_stack_vertices.begin(), out.truncated_stack_vertices.end());
    out.covered_edge_count = wilson_.snapshot(horizon_).edge_of.size();
    return out;
}

GibbsPrefixSample sample_gibbs_prefix(const LazyDigraph& g, std::size_t k, std::uint64_t horizon,
                                      RngStream& rng) {
    GibbsPrefixSampler sampler(g, horizon);
    return sampler.sample(k, rng);
}

}  // namespace eulerpath
