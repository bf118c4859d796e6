#include "eulerpath/pex.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "eulerpath/euler.hpp"
#include "eulerpath/stats.hpp"

namespace eulerpath {

namespace {

// Sorted outgoing count entries per state, for deterministic backtracking.
std::map<State, std::vector<std::pair<State, std::uint64_t>>> out_lists(
    const TransitionCounts& c) {
    std::map<State, std::vector<std::pair<State, std::uint64_t>>> lists;
    for (const auto& [uv, m] : c.counts) {
        if (m > 0) lists[uv.first].emplace_back(uv.second, m);
    }
    return lists;  // inner vectors inherit the map's (u, v) ordering
}

std::string class_key(const TransitionCounts& c) {
    std::string key = c.start;
    key += '\x1f';
    for (const auto& [uv, m] : c.counts) {
        if (m == 0) continue;
        key += uv.first;
        key += '\x1e';
        key += uv.second;
        key += '\x1e';
        key += std::to_string(m);
        key += '\x1f';
    }
    return key;
}

}  // namespace

std::uint64_t TransitionCounts::total() const {
    std::uint64_t n = 0;
    for (const auto& [uv, m] : counts) n += m;
    return n;
}

TransitionCounts transition_counts(const std::vector<State>& seq) {
    if (seq.empty()) throw EmptySequence();
    TransitionCounts c;
    c.start = seq.front();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        ++c.counts[{seq[i], seq[i + 1]}];
    }
    return c;
}

bool pex_equivalent(const std::vector<State>& x, const std::vector<State>& y) {
    return transition_counts(x) == transition_counts(y);
}

std::map<std::pair<State, State>, double> transition_frequencies(const std::vector<State>& seq) {
    if (seq.size() < 2) throw EmptySequence();
    std::map<State, std::uint64_t> visits;
    std::map<std::pair<State, State>, std::uint64_t> trans;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        ++visits[seq[i]];
        ++trans[{seq[i], seq[i + 1]}];
    }
    std::map<std::pair<State, State>, double> q;
    for (const auto& [uv, m] : trans) {
        q[uv] = static_cast<double>(m) / static_cast<double>(visits.at(uv.first));
    }
    return q;
}

CountsDigraph digraph_from_counts(const TransitionCounts& c) {
    std::set<State> tokens;
    tokens.insert(c.start);
    for (const auto& [uv, m] : c.counts) {
        if (m == 0) continue;
        tokens.insert(uv.first);
        tokens.insert(uv.second);
    }
    std::vector<State> states(tokens.begin(), tokens.end());
    std::map<State, VertexId> ids;
    for (std::size_t i = 0; i < states.size(); ++i) ids.emplace(states[i], i);

    std::vector<EdgeSpec> edges;
    std::map<State, std::int64_t> diff;  // out minus in
    EdgeId next_id = 0;
    for (const auto& [uv, m] : c.counts) {
        for (std::uint64_t i = 0; i < m; ++i) {
            edges.push_back({next_id++, ids.at(uv.first), ids.at(uv.second)});
        }
        diff[uv.first] += static_cast<std::int64_t>(m);
        diff[uv.second] -= static_cast<std::int64_t>(m);
    }

    std::vector<State> surplus, deficit;
    for (const auto& [state, d] : diff) {
        if (d > 1 || d < -1) throw NoEulerianEndpoint("state " + state + " has imbalance " +
                                                      std::to_string(d));
        if (d == 1) surplus.push_back(state);
        if (d == -1) deficit.push_back(state);
    }
    State end;
    if (surplus.empty() && deficit.empty()) {
        end = c.start;
    } else if (surplus.size() == 1 && deficit.size() == 1 && surplus.front() == c.start) {
        end = deficit.front();
    } else if (surplus.size() == 1 && surplus.front() != c.start) {
        throw NoEulerianEndpoint("state " + surplus.front() +
                                 " has surplus out-degree but is not the start");
    } else {
        throw NoEulerianEndpoint("more than one state is unbalanced");
    }

    const VertexId source = ids.at(c.start);
    const std::optional<VertexId> sink =
        end == c.start ? std::nullopt : std::optional<VertexId>(ids.at(end));
    CountsDigraph cd{build_digraph(std::move(edges), source, sink), std::move(states),
                     std::move(ids), std::move(end)};
    if (classify_eulerian(cd.graph).kind == EulerianKind::NotEulerian) {
        throw DisconnectedCounts();  // degrees already fit, so connectivity failed
    }
    return cd;
}

std::vector<State> condition_on_counts(const CountsDigraph& cd, RngStream& rng) {
    const Path p = sample_eulerian_finite(cd.graph, rng);
    std::vector<State> seq;
    seq.reserve(p.vertices.size());
    for (VertexId v : p.vertices) seq.push_back(cd.states.at(v));
    return seq;
}

std::vector<State> condition_on_counts(const TransitionCounts& c, RngStream& rng) {
    return condition_on_counts(digraph_from_counts(c), rng);
}

std::vector<std::vector<State>> enumerate_class_members(const TransitionCounts& c,
                                                        std::uint64_t cap) {
    if (c.start.empty() && c.counts.empty()) throw EmptySequence();
    auto lists = out_lists(c);
    std::map<std::pair<State, State>, std::uint64_t> remaining = c.counts;
    const std::uint64_t total = c.total();

    std::vector<std::vector<State>> results;
    std::vector<State> seq{c.start};
    std::vector<std::size_t> cursor{0};

    auto backtrack = [&]() {
        cursor.pop_back();
        if (cursor.empty()) return;
        ++remaining.at({seq[seq.size() - 2], seq.back()});
        seq.pop_back();
    };

    while (!cursor.empty()) {
        if (seq.size() == total + 1) {
            if (results.size() >= cap) throw CapExceeded(cap);
            results.push_back(seq);
            backtrack();
            continue;
        }
        const State& u = seq.back();
        const auto it = lists.find(u);
        static const std::vector<std::pair<State, std::uint64_t>> kNoEdges;
        const auto& list = it == lists.end() ? kNoEdges : it->second;
        std::size_t& cur = cursor.back();
        while (cur < list.size() && remaining.at({u, list[cur].first}) == 0) ++cur;
        if (cur < list.size()) {
            const State v = list[cur].first;
            ++cur;
            --remaining.at({u, v});
            seq.push_back(v);
            cursor.push_back(0);
        } else {
            backtrack();
        }
    }
    return results;
}

BigInt count_class_members(const TransitionCounts& c) {
    const CountsDigraph cd = digraph_from_counts(c);
    const BigInt paths = count_eulerian_paths(cd.graph);
    BigInt perms = 1;
    for (const auto& [uv, m] : c.counts) {
        for (std::uint64_t i = 2; i <= m; ++i) perms *= i;
    }
    if (paths % perms != 0) {
        throw OracleInconsistency("Eulerian path count is not a multiple of the count factorials");
    }
    return paths / perms;
}

namespace {

struct ClassBucket {
    TransitionCounts counts;
    std::map<std::vector<State>, std::uint64_t> obs;
    std::uint64_t total = 0;
};

// Shared chi-square accumulation over equivalence classes; `members` are the
// theoretical class members, `obs` the empirical histogram.
struct ChiAccumulator {
    double statistic = 0.0;
    double dof = 0.0;
    std::size_t classes_tested = 0;
    bool saw_multi_member = false;

    template <typename Key>
    void add_class(const std::vector<Key>& members, const std::map<Key, std::uint64_t>& obs,
                   std::uint64_t total, std::uint64_t min_expected) {
        if (members.size() <= 1) return;
        saw_multi_member = true;
        if (total < min_expected * members.size()) return;
        std::set<Key> member_set(members.begin(), members.end());
        for (const auto& [key, n] : obs) {
            if (member_set.count(key) == 0) {
                throw OracleInconsistency("observed outcome outside the theoretical class");
            }
        }
        const double expected =
            static_cast<double>(total) / static_cast<double>(members.size());
        for (const Key& member : members) {
            const auto it = obs.find(member);
            const double o = it == obs.end() ? 0.0 : static_cast<double>(it->second);
            statistic += (o - expected) * (o - expected) / expected;
        }
        dof += static_cast<double>(members.size() - 1);
        ++classes_tested;
    }

    PexTestReport report(std::uint64_t samples) const {
        if (classes_tested == 0) {
            throw InsufficientSamples(
                saw_multi_member
                    ? "no equivalence class reached the expected-count threshold"
                    : "every observed equivalence class has a single member");
        }
        return {classes_tested, statistic, dof, chi_square_p_value(statistic, dof), samples};
    }
};

}  // namespace

PexTestReport test_partial_exchangeability(const SequenceSampler& sampler, std::size_t prefix_len,
                                           std::uint64_t samples, std::uint64_t seed,
                                           std::uint64_t min_expected) {
    if (prefix_len == 0) throw Error("prefix length must be at least 1");
    if (samples == 0) throw InsufficientSamples("no samples requested");
    if (min_expected == 0) min_expected = 1;

    std::map<std::string, ClassBucket> buckets;
    for (std::uint64_t i = 0; i < samples; ++i) {
        RngStream rng = make_stream(seed, i);
        std::vector<State> seq = sampler(rng);
        if (seq.size() < prefix_len + 1) {
            throw Error("sampled sequence is shorter than the requested prefix");
        }
        seq.resize(prefix_len + 1);
        TransitionCounts tc = transition_counts(seq);
        ClassBucket& bucket = buckets[class_key(tc)];
        if (bucket.total == 0) bucket.counts = std::move(tc);
        ++bucket.obs[std::move(seq)];
        ++bucket.total;
    }

    ChiAccumulator acc;
    for (const auto& [key, bucket] : buckets) {
        const BigInt member_count = count_class_members(bucket.counts);
        if (member_count == 1) continue;
        acc.saw_multi_member = true;
        if (BigInt(bucket.total) < BigInt(min_expected) * member_count) continue;
        const auto members =
            enumerate_class_members(bucket.counts, static_cast<std::uint64_t>(member_count) + 1);
        if (BigInt(members.size()) != member_count) {
            throw OracleInconsistency("class enumeration disagrees with the closed-form count");
        }
        acc.add_class(members, bucket.obs, bucket.total, min_expected);
    }
    return acc.report(samples);
}

PexTestReport test_gibbs_property(const Digraph& g, std::size_t cut, std::uint64_t samples,
                                  std::uint64_t seed, std::uint64_t min_expected) {
    const EulerianClassification cls = classify_eulerian(g);
    if (cls.kind == EulerianKind::NotEulerian) throw NotEulerianInput(cls.witness);
    const std::size_t m = g.edge_count();
    if (cut == 0 || cut >= m) throw Error("cut must split the path into non-empty halves");
    if (samples == 0) throw InsufficientSamples("no samples requested");
    if (min_expected == 0) min_expected = 1;

    std::map<std::vector<EdgeId>, std::map<std::vector<EdgeId>, std::uint64_t>> bins;
    for (std::uint64_t i = 0; i < samples; ++i) {
        RngStream rng = make_stream(seed, i);
        const Path p = sample_eulerian_finite(g, rng);
        std::vector<EdgeId> prefix(p.edges.begin(), p.edges.begin() + cut);
        std::vector<EdgeId> suffix(p.edges.begin() + cut, p.edges.end());
        ++bins[std::move(suffix)][std::move(prefix)];
    }

    ChiAccumulator acc;
    for (const auto& [suffix, obs] : bins) {
        std::uint64_t total = 0;
        for (const auto& [prefix, n] : obs) total += n;

        // Prefixes given this suffix must be uniform over the Eulerian paths
        // of the complement subgraph from the start to the suffix's tail.
        std::set<EdgeId> removed(suffix.begin(), suffix.end());
        std::vector<EdgeSpec> rest;
        for (EdgeId e : g.edge_ids()) {
            if (removed.count(e) == 0) rest.push_back(g.spec(e));
        }
        const VertexId x = g.tail(suffix.front());
        const Digraph sub = build_digraph(
            std::move(rest), cls.start,
            x == cls.start ? std::nullopt : std::optional<VertexId>(x));

        const BigInt member_count = count_eulerian_paths(sub);
        if (member_count == 1) continue;
        acc.saw_multi_member = true;
        if (BigInt(total) < BigInt(min_expected) * member_count) continue;
        const auto member_paths =
            enumerate_eulerian_paths(sub, static_cast<std::uint64_t>(member_count) + 1);
        std::vector<std::vector<EdgeId>> members;
        members.reserve(member_paths.size());
        for (const Path& p : member_paths) members.push_back(p.edges);
        acc.add_class(members, obs, total, min_expected);
    }
    return acc.report(samples);
}

}  // namespace eulerpath
