#include "eulerpath/lazy_digraph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace eulerpath {

LazyDigraph::LazyDigraph(VertexId source, OutEdgesOracle out_edges, InDegreeOracle in_degree,
                         ExhaustionOracle exhaustion)
    : source_(source),
      out_oracle_(std::move(out_edges)),
      in_oracle_(std::move(in_degree)),
      exhaustion_oracle_(std::move(exhaustion)) {
    if (!out_oracle_ || !in_oracle_) throw Error("lazy digraph requires out-edge and in-degree oracles");
}

std::size_t LazyDigraph::ensure_registered(VertexId v) const {
    auto it = dense_.find(v);
    if (it != dense_.end()) return it->second;
    const std::size_t index = by_index_.size();
    dense_.emplace(v, index);
    by_index_.push_back(v);
    out_memo_.emplace_back(std::nullopt);
    in_memo_.emplace_back(std::nullopt);
    return index;
}

std::vector<OutEdge> LazyDigraph::query_out(VertexId v) const {
    std::vector<OutEdge> result = out_oracle_(v);
    std::sort(result.begin(), result.end(),
              [](const OutEdge& a, const OutEdge& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < result.size(); ++i) {
        if (result[i].id == result[i - 1].id) {
            throw OracleInconsistency("out-edge oracle returned duplicate edge id " +
                                      std::to_string(result[i].id) + " at vertex " +
                                      std::to_string(v));
        }
    }
    return result;
}

const std::vector<OutEdge>& LazyDigraph::out_edges(VertexId v) const {
    std::size_t index;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        index = ensure_registered(v);
        if (out_memo_[index]) return *out_memo_[index];
    }
    // Query outside the lock so a reentrant oracle cannot deadlock us.
    std::vector<OutEdge> fresh = query_out(v);
    std::lock_guard<std::mutex> lock(mutex_);
    if (!out_memo_[index]) {
        for (const OutEdge& e : fresh) {
            auto [it, inserted] = edge_registry_.emplace(e.id, std::make_pair(v, e.head));
            if (!inserted && (it->second.first != v || it->second.second != e.head)) {
                throw OracleInconsistency("edge id " + std::to_string(e.id) +
                                          " reported with conflicting endpoints");
            }
        }
        out_memo_[index] = std::move(fresh);
    }
    return *out_memo_[index];
}

std::size_t LazyDigraph::in_degree(VertexId v) const {
    std::size_t index;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        index = ensure_registered(v);
        if (in_memo_[index]) return *in_memo_[index];
    }
    const std::size_t fresh = in_oracle_(v);
    std::lock_guard<std::mutex> lock(mutex_);
    if (!in_memo_[index]) in_memo_[index] = fresh;
    return *in_memo_[index];
}

std::vector<VertexId> LazyDigraph::exhaustion(std::size_t n) const {
    if (!exhaustion_oracle_) throw ExhaustionUnavailable(n);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = exhaustion_memo_.find(n);
        if (it != exhaustion_memo_.end()) return it->second;
    }
    std::vector<VertexId> fresh = exhaustion_oracle_(n);
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());

    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& [m, vm] : exhaustion_memo_) {
        const auto& smaller = (m < n) ? vm : fresh;
        const auto& larger = (m < n) ? fresh : vm;
        if (m != n && !std::includes(larger.begin(), larger.end(), smaller.begin(), smaller.end())) {
            throw OracleInconsistency("exhaustion sets are not nested (V_" + std::to_string(m) +
                                      " vs V_" + std::to_string(n) + ")");
        }
    }
    return exhaustion_memo_.emplace(n, std::move(fresh)).first->second;
}

std::size_t LazyDigraph::dense_index(VertexId v) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return ensure_registered(v);
}

VertexId LazyDigraph::vertex_at(std::size_t index) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (index >= by_index_.size()) throw Error("vertex index out of range");
    return by_index_[index];
}

std::size_t LazyDigraph::seen_count() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return by_index_.size();
}

void LazyDigraph::recheck(VertexId v) const {
    const std::vector<OutEdge>& memoized = out_edges(v);
    const std::vector<OutEdge> fresh = query_out(v);
    bool same = fresh.size() == memoized.size();
    for (std::size_t i = 0; same && i < fresh.size(); ++i) {
        same = fresh[i].id == memoized[i].id && fresh[i].head == memoized[i].head;
    }
    if (!same) {
        throw OracleInconsistency("out-edge oracle changed its answer at vertex " +
                                  std::to_string(v));
    }
    const std::size_t din = in_degree(v);
    if (in_oracle_(v) != din) {
        throw OracleInconsistency("in-degree oracle changed its answer at vertex " +
                                  std::to_string(v));
    }
}

namespace {

struct LadderOracles {
    LazyDigraph::OutEdgesOracle out;
    LazyDigraph::InDegreeOracle in;
    LazyDigraph::ExhaustionOracle exhaustion;
};

LadderOracles ladder_oracles(unsigned p, unsigned q) {
    if (p < 1) throw Error("ladder family requires p >= 1");
    const std::uint64_t stride = p + q;
    LadderOracles o;
    o.out = [p, q, stride](VertexId n) {
        std::vector<OutEdge> edges;
        edges.reserve(p + (n > 0 ? q : 0));
        for (std::uint64_t j = 0; j < p; ++j) edges.push_back({stride * n + j, n + 1});
        if (n > 0) {
            for (std::uint64_t j = 0; j < q; ++j) edges.push_back({stride * n + p + j, n - 1});
        }
        return edges;
    };
    o.in = [p, q](VertexId n) -> std::size_t { return n == 0 ? q : p + q; };
    o.exhaustion = [](std::size_t n) {
        std::vector<VertexId> vs(n);
        for (std::size_t i = 0; i < n; ++i) vs[i] = i;
        return vs;
    };
    return o;
}

}  // namespace

LazyDigraph ladder_family(unsigned p, unsigned q) {
    LadderOracles o = ladder_oracles(p, q);
    return LazyDigraph(0, std::move(o.out), std::move(o.in), std::move(o.exhaustion));
}

std::shared_ptr<LazyDigraph> ladder_family_shared(unsigned p, unsigned q) {
    LadderOracles o = ladder_oracles(p, q);
    return std::make_shared<LazyDigraph>(0, std::move(o.out), std::move(o.in),
                                         std::move(o.exhaustion));
}

SourcedEulerianCertificate classify_sourced_eulerian_prefix(const LazyDigraph& g,
                                                            std::size_t depth) {
    const VertexId o = g.source();
    std::set<VertexId> visited{o};
    std::vector<VertexId> frontier{o};

    auto check = [&](VertexId v) -> std::optional<DegreeWitness> {
        g.recheck(v);
        const std::size_t dout = g.out_degree(v);
        const std::size_t din = g.in_degree(v);
        const bool ok = (v == o) ? (dout == din + 1) : (dout == din);
        if (ok) return std::nullopt;
        return DegreeWitness{v, din, dout};
    };

    if (auto w = check(o)) return {false, depth, w};
    for (std::size_t d = 1; d <= depth && !frontier.empty(); ++d) {
        std::vector<VertexId> next;
        for (VertexId v : frontier) {
            for (const OutEdge& e : g.out_edges(v)) {
                if (!visited.insert(e.head).second) continue;
                if (auto w = check(e.head)) return {false, depth, w};
                next.push_back(e.head);
            }
        }
        frontier = std::move(next);
    }
    return {true, depth, std::nullopt};
}

ContractedDigraph contract_boundary(const LazyDigraph& g, std::size_t n) {
    if (!g.has_exhaustion()) throw ExhaustionUnavailable(n);
    const std::vector<VertexId> vn = g.exhaustion(n);
    if (vn.empty()) throw ExhaustionUnavailable(n);
    const std::set<VertexId> inside(vn.begin(), vn.end());
    if (!inside.count(g.source())) {
        throw OracleInconsistency("exhaustion set V_" + std::to_string(n) +
                                  " does not contain the source");
    }

    VertexId max_seen = *inside.rbegin();
    std::vector<EdgeSpec> edges;            // endpoints fixed up after the boundary id is known
    std::vector<std::size_t> boundary_tail; // positions in `edges` whose head is the boundary
    std::vector<std::size_t> boundary_head; // positions whose tail is the boundary
    std::map<VertexId, std::size_t> found_in;
    for (VertexId v : vn) found_in[v] = 0;

    for (VertexId v : vn) {
        for (const OutEdge& e : g.out_edges(v)) {
            max_seen = std::max(max_seen, e.head);
            if (inside.count(e.head)) {
                edges.push_back({e.id, v, e.head});
                ++found_in[e.head];
            } else {
                boundary_tail.push_back(edges.size());
                edges.push_back({e.id, v, 0});
            }
        }
    }

    auto all_matched = [&]() {
        for (VertexId v : vn) {
            const std::size_t want = g.in_degree(v);
            if (found_in[v] > want) {
                throw OracleInconsistency("found more in-edges at vertex " + std::to_string(v) +
                                          " than the in-degree oracle reports");
            }
            if (found_in[v] < want) return false;
        }
        return true;
    };

    // Discover edges entering V_n from outside: widen the scanned window
    // until every inside vertex has as many in-edges as the oracle promises.
    std::set<VertexId> scanned(inside);
    std::size_t m = n;
    std::size_t stale_rounds = 0;
    while (!all_matched()) {
        ++m;
        if (m > n + 1000000) {
            throw OracleInconsistency("in-edge discovery did not converge by V_" +
                                      std::to_string(m));
        }
        bool grew = false;
        for (VertexId u : g.exhaustion(m)) {
            if (!scanned.insert(u).second) continue;
            grew = true;
            for (const OutEdge& e : g.out_edges(u)) {
                max_seen = std::max({max_seen, u, e.head});
                if (inside.count(e.head)) {
                    boundary_head.push_back(edges.size());
                    edges.push_back({e.id, 0, e.head});
                    ++found_in[e.head];
                }
            }
        }
        stale_rounds = grew ? 0 : stale_rounds + 1;
        if (stale_rounds >= 2) {
            throw OracleInconsistency(
                "exhaustion stopped growing before all promised in-edges were found");
        }
    }

    const VertexId boundary = max_seen + 1;
    for (std::size_t pos : boundary_tail) edges[pos].head = boundary;
    for (std::size_t pos : boundary_head) edges[pos].tail = boundary;

    return ContractedDigraph{Digraph(std::move(edges), g.source(), boundary), boundary, n};
}

}  // namespace eulerpath
