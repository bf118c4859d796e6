#include "eulerpath/arborescence.hpp"

#include <algorithm>

namespace eulerpath {

std::set<EdgeId> edge_set(const InArboretum& a) {
    std::set<EdgeId> edges;
    for (const auto& [v, e] : a.edge_of) edges.insert(e);
    return edges;
}

std::optional<VertexId> validate_in_arborescence(const Digraph& g, const std::set<EdgeId>& edges,
                                                 VertexId root) {
    g.index_of(root);
    std::map<VertexId, EdgeId> out_of;
    for (EdgeId e : edges) {
        const VertexId tail = g.tail(e);  // throws UnknownEdge for foreign ids
        if (out_of.count(tail)) return tail;  // out-degree above one
        out_of[tail] = e;
    }
    if (out_of.count(root)) return root;
    for (VertexId v : g.vertices()) {
        if (v != root && !out_of.count(v)) return v;  // missing out-edge
    }
    // Every vertex must drain to the root; a cycle would spin past n hops.
    for (VertexId v : g.vertices()) {
        VertexId at = v;
        std::size_t hops = 0;
        while (at != root) {
            if (++hops > g.vertex_count()) return v;
            at = g.head(out_of.at(at));
        }
    }
    return std::nullopt;
}

std::optional<VertexId> validate_in_arborescence(const Digraph& g, const InArboretum& a,
                                                 VertexId root) {
    return validate_in_arborescence(g, edge_set(a), root);
}

PastResult past(const InArboretum& a, const std::function<VertexId(EdgeId)>& head, VertexId v,
                std::size_t bound) {
    std::map<VertexId, std::vector<VertexId>> children;
    for (const auto& [u, e] : a.edge_of) children[head(e)].push_back(u);

    PastResult result{{}, false};
    std::vector<VertexId> frontier{v};
    result.vertices.insert(v);
    while (!frontier.empty()) {
        const VertexId w = frontier.back();
        frontier.pop_back();
        auto it = children.find(w);
        if (it == children.end()) continue;
        for (VertexId u : it->second) {
            if (!result.vertices.insert(u).second) continue;
            if (result.vertices.size() > bound) {
                result.bound_exceeded = true;
                return result;
            }
            frontier.push_back(u);
        }
    }
    return result;
}

PastResult past(const InArboretum& a, const Digraph& g, VertexId v, std::size_t bound) {
    return past(a, [&g](EdgeId e) { return g.head(e); }, v, bound);
}

OneEndedReport check_one_ended(const InArboretum& a, const std::function<VertexId(EdgeId)>& head,
                               const std::vector<VertexId>& sample, std::size_t bound) {
    OneEndedReport report{0, 0, {}, bound};
    for (VertexId v : sample) {
        ++report.checked;
        if (past(a, head, v, bound).bound_exceeded) {
            report.unbounded.push_back(v);
        } else {
            ++report.finite_pasts;
        }
    }
    return report;
}

std::vector<InArboretum> enumerate_in_arborescences(const Digraph& g, VertexId root,
                                                    std::uint64_t cap) {
    g.index_of(root);  // throws UnknownVertex for a root outside the graph
    std::vector<VertexId> others;
    for (VertexId v : g.vertices()) {
        if (v != root) others.push_back(v);
    }

    std::vector<InArboretum> found;
    std::set<VertexId> full_cover(g.vertices().begin(), g.vertices().end());
    if (others.empty()) {
        found.push_back(InArboretum{{}, full_cover});
        return found;
    }
    for (VertexId v : others) {
        if (g.out_degree(v) == 0) return found;  // no choice possible, count is zero
    }

    // Odometer over out-edge choices; keep the acyclic assignments.
    std::vector<std::size_t> choice(others.size(), 0);
    std::map<VertexId, EdgeId> edge_of;
    for (;;) {
        edge_of.clear();
        for (std::size_t i = 0; i < others.size(); ++i) {
            edge_of[others[i]] = g.out_edges(others[i])[choice[i]];
        }
        InArboretum candidate{edge_of, full_cover};
        if (!validate_in_arborescence(g, candidate, root).has_value()) {
            if (found.size() + 1 > cap) throw CapExceeded(cap);
            found.push_back(std::move(candidate));
        }
        std::size_t pos = 0;
        while (pos < others.size()) {
            if (++choice[pos] < g.out_degree(others[pos])) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == others.size()) break;
    }
    return found;
}

namespace {

// Fraction-free Bareiss elimination; exact determinant over BigInt.
BigInt integer_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

BigInt count_in_arborescences(const Digraph& g, VertexId root) {
    const std::size_t n = g.vertex_count();
    const std::size_t r = g.index_of(root);
    if (n == 1) return 1;

    // Out-degree Laplacian with root row/column deleted.  Self-loops cancel.
    std::vector<std::vector<BigInt>> m(n - 1, std::vector<BigInt>(n - 1, 0));
    auto reduced = [r](std::size_t i) { return i < r ? i : i - 1; };
    for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        const VertexId v = g.vertex_at(i);
        m[reduced(i)][reduced(i)] = static_cast<long long>(g.out_degree(v));
        for (EdgeId e : g.out_edges(v)) {
            const std::size_t j = g.index_of(g.head(e));
            if (j == r) continue;
            m[reduced(i)][reduced(j)] -= 1;
        }
    }
    return integer_determinant(std::move(m));
}

}  // namespace eulerpath
