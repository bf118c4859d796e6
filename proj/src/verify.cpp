#include "eulerpath/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "eulerpath/euler.hpp"
#include "eulerpath/parallel.hpp"
#include "eulerpath/pex.hpp"
#include "eulerpath/stats.hpp"
#include "eulerpath/walks.hpp"
#include "eulerpath/wilson.hpp"

namespace eulerpath {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(seed ^ splitmix64(tag));
}

std::string walk_name(const std::vector<VertexId>& seq) {
    std::string name = "walk";
    for (VertexId v : seq) {
        name += '-';
        name += std::to_string(v);
    }
    return name;
}

// Build the digraph traced by a walk sequence: edge per consecutive pair,
// ids in sorted (tail, head) order, start 0, sink at the final vertex when
// it differs from the start.
NamedGraph graph_of_walk(const std::vector<VertexId>& seq) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) pairs.emplace_back(seq[i], seq[i + 1]);
    std::sort(pairs.begin(), pairs.end());
    std::vector<EdgeSpec> edges;
    edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        edges.push_back({static_cast<EdgeId>(i), pairs[i].first, pairs[i].second});
    }
    const VertexId z = seq.back();
    return {walk_name(seq),
            build_digraph(std::move(edges), 0,
                          z == 0 ? std::nullopt : std::optional<VertexId>(z))};
}

std::string multiset_key(const std::vector<VertexId>& seq) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) pairs.emplace_back(seq[i], seq[i + 1]);
    std::sort(pairs.begin(), pairs.end());
    std::string key;
    for (const auto& [t, h] : pairs) {
        key += std::to_string(t);
        key += ',';
        key += std::to_string(h);
        key += ';';
    }
    return key;
}

}  // namespace

std::vector<NamedGraph> exhaustive_eulerian_corpus(std::size_t max_edges) {
    std::vector<NamedGraph> out;
    std::set<std::string> seen;

    std::vector<VertexId> seq{0};
    // Depth-first over canonical walk sequences: the next vertex is at most
    // one past the largest one seen, which fixes first-visit labels.
    auto rec = [&](auto&& self) -> void {
        if (seen.insert(multiset_key(seq)).second) out.push_back(graph_of_walk(seq));
        if (seq.size() > max_edges) return;
        const VertexId top = *std::max_element(seq.begin(), seq.end());
        for (VertexId next = 0; next <= top + 1; ++next) {
            seq.push_back(next);
            self(self);
            seq.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<NamedGraph> random_eulerian_corpus(std::size_t count, std::size_t max_edges,
                                               std::uint64_t seed) {
    std::vector<NamedGraph> out;
    std::set<std::string> seen;
    RngStream rng = make_stream(seed, 0xC0FFEEull);
    const std::size_t lo = std::min<std::size_t>(7, max_edges);
    // Cap the path count so exhaustive enumeration over the random corpus
    // stays well inside the time budget.
    const BigInt richness_cap = 20000;

    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 1000000) throw Error("random corpus generation stalled");
        const std::size_t edges = lo + rng.below(max_edges - lo + 1);
        std::vector<VertexId> seq{0};
        VertexId top = 0;
        for (std::size_t i = 0; i < edges; ++i) {
            const VertexId next = rng.below(top + 2);
            seq.push_back(next);
            top = std::max(top, next);
        }
        const std::string key = multiset_key(seq);
        if (seen.count(key) != 0) continue;
        NamedGraph g = graph_of_walk(seq);
        if (count_eulerian_paths(g.graph) > richness_cap) continue;
        seen.insert(key);
        g.name = "rand-" + std::to_string(out.size()) + "-" + g.name;
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

// ---------- shared helpers ----------

std::vector<EdgeId> arboretum_key(const InArboretum& a) {
    std::vector<EdgeId> key;
    key.reserve(a.edge_of.size());
    for (const auto& [v, e] : a.edge_of) key.push_back(e);
    std::sort(key.begin(), key.end());
    return key;
}

struct Histogram {
    std::map<std::vector<EdgeId>, std::size_t> index;
    std::vector<std::uint64_t> bins;
    std::uint64_t unknown = 0;  // observations outside the reference support

    explicit Histogram(const std::vector<std::vector<EdgeId>>& support) {
        for (const auto& k : support) index.emplace(k, index.size());
        bins.assign(index.size(), 0);
    }

    void add(const std::vector<EdgeId>& key, std::uint64_t n = 1) {
        const auto it = index.find(key);
        if (it == index.end()) {
            unknown += n;
        } else {
            bins[it->second] += n;
        }
    }

    void merge(const Histogram& other) {
        for (std::size_t i = 0; i < bins.size(); ++i) bins[i] += other.bins[i];
        unknown += other.unknown;
    }
};

double uniform_chi_square_p(const std::vector<std::uint64_t>& bins, std::uint64_t total) {
    const double expected = static_cast<double>(total) / static_cast<double>(bins.size());
    double stat = 0.0;
    for (std::uint64_t b : bins) {
        const double d = static_cast<double>(b) - expected;
        stat += d * d / expected;
    }
    return chi_square_p_value(stat, static_cast<double>(bins.size() - 1));
}

double total_variation_from_uniform(const std::vector<std::uint64_t>& bins, std::uint64_t total) {
    const double u = 1.0 / static_cast<double>(bins.size());
    double tv = 0.0;
    for (std::uint64_t b : bins) {
        tv += std::abs(static_cast<double>(b) / static_cast<double>(total) - u);
    }
    return tv / 2.0;
}

// Evenly spread picks across a filtered corpus, for shape diversity.
std::vector<std::size_t> spread_indices(std::size_t available, std::size_t wanted) {
    std::vector<std::size_t> picks;
    if (available == 0) return picks;
    wanted = std::min(wanted, available);
    for (std::size_t i = 0; i < wanted; ++i) {
        picks.push_back(i * available / wanted);
    }
    return picks;
}

// ---------- suite: best ----------

CheckResult check_count_matches_enumeration(const std::vector<NamedGraph>& corpus,
                                            const std::vector<NamedGraph>& random_corpus) {
    Json mismatches = Json::array();
    BigInt largest = 0;
    std::size_t tested = 0;
    for (const auto* pool : {&corpus, &random_corpus}) {
        for (const NamedGraph& ng : *pool) {
            const BigInt closed_form = count_eulerian_paths(ng.graph);
            const std::uint64_t enumerated = count_eulerian_paths_exhaustive(ng.graph);
            largest = std::max(largest, closed_form);
            ++tested;
            if (closed_form != enumerated && mismatches.size() < 3) {
                mismatches.push_back(Json{{"graph", ng.name},
                                          {"closed_form", decimal_string(closed_form)},
                                          {"enumerated", enumerated}});
            }
        }
    }
    return {"count-matches-enumeration", mismatches.empty(),
            Json{{"instances", tested},
                 {"largest_count", decimal_string(largest)},
                 {"mismatches", mismatches}}};
}

CheckResult check_arborescence_count(const std::vector<NamedGraph>& corpus,
                                     const std::vector<NamedGraph>& random_corpus) {
    Json mismatches = Json::array();
    std::size_t tested = 0;
    for (const auto* pool : {&corpus, &random_corpus}) {
        for (const NamedGraph& ng : *pool) {
            for (VertexId root : ng.graph.vertices()) {
                const BigInt closed_form = count_in_arborescences(ng.graph, root);
                const auto enumerated = enumerate_in_arborescences(ng.graph, root, 1000000);
                ++tested;
                if (closed_form != enumerated.size() && mismatches.size() < 3) {
                    mismatches.push_back(Json{{"graph", ng.name},
                                              {"root", root},
                                              {"closed_form", decimal_string(closed_form)},
                                              {"enumerated", enumerated.size()}});
                }
            }
        }
    }
    return {"arborescence-count-matches-enumeration", mismatches.empty(),
            Json{{"instances", tested}, {"mismatches", mismatches}}};
}

CheckResult check_stack_characterization(const std::vector<NamedGraph>& corpus) {
    Json failures = Json::array();
    std::uint64_t configs = 0;
    std::size_t graphs = 0;
    for (const NamedGraph& ng : corpus) {
        const Digraph& g = ng.graph;
        const EulerianClassification cls = classify_eulerian(g);
        const std::size_t m = g.edge_count();

        std::set<std::vector<EdgeId>> expected;
        for (const Path& p : enumerate_eulerian_paths(g, 1000000)) expected.insert(p.edges);

        // All stack configurations: per-vertex permutations of out-edges.
        std::vector<VertexId> keys;
        std::vector<std::vector<std::vector<EdgeId>>> perms;
        for (VertexId v : g.vertices()) {
            if (g.out_degree(v) == 0) continue;
            keys.push_back(v);
            std::vector<EdgeId> base = g.out_edges(v);
            std::vector<std::vector<EdgeId>> all;
            do {
                all.push_back(base);
            } while (std::next_permutation(base.begin(), base.end()));
            perms.push_back(std::move(all));
        }

        std::set<std::vector<EdgeId>> accepted;
        std::vector<std::size_t> idx(keys.size(), 0);
        bool done = false;
        while (!done) {
            StackConfiguration s;
            for (std::size_t i = 0; i < keys.size(); ++i) s[keys[i]] = perms[i][idx[i]];
            ++configs;

            const bool characterized = is_eulerian_stack(g, cls.start, cls.end, s);
            const FollowResult f = follow_stacks(g, cls.start, s, m + 1);
            const bool eulerian = f.path.edges.size() == m && f.path.end() == cls.end;
            bool ok = characterized == eulerian;
            if (characterized && ok) {
                ok = expected.count(f.path.edges) != 0 && accepted.insert(f.path.edges).second &&
                     stacks_of_path(f.path) == s;
            }
            if (!ok && failures.size() < 3) {
                failures.push_back(Json{{"graph", ng.name},
                                        {"characterized", characterized},
                                        {"followed_eulerian", eulerian}});
            }

            // odometer step
            done = true;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (++idx[i] < perms[i].size()) {
                    done = false;
                    break;
                }
                idx[i] = 0;
            }
        }
        if (accepted != expected && failures.size() < 3) {
            failures.push_back(Json{{"graph", ng.name},
                                    {"accepted", accepted.size()},
                                    {"paths", expected.size()}});
        }
        ++graphs;
    }
    return {"stack-characterization-bijective", failures.empty(),
            Json{{"graphs", graphs}, {"configurations", configs}, {"failures", failures}}};
}

// ---------- suite: wilson ----------

CheckResult check_wilson_uniformity(const std::vector<NamedGraph>& corpus, std::uint64_t seed) {
    // Graphs whose end vertex roots between 2 and 30 arborescences.
    std::vector<std::pair<const NamedGraph*, VertexId>> pool;
    for (const NamedGraph& ng : corpus) {
        const EulerianClassification cls = classify_eulerian(ng.graph);
        const BigInt n = count_in_arborescences(ng.graph, cls.end);
        if (n >= 2 && n <= 30) pool.emplace_back(&ng, cls.end);
    }
    const auto picks = spread_indices(pool.size(), 10);

    const std::uint64_t kSamples = 100000;
    double min_p = 1.0;
    Json failures = Json::array();
    std::size_t graphs = 0;

    for (std::size_t pi = 0; pi < picks.size(); ++pi) {
        const auto& [ng, root] = pool[picks[pi]];
        const Digraph& g = ng->graph;
        std::vector<std::vector<EdgeId>> support;
        for (const InArboretum& a : enumerate_in_arborescences(g, root, 1000)) {
            support.push_back(arboretum_key(a));
        }

        std::vector<VertexId> sorted_order = g.vertices();
        std::vector<VertexId> reversed_order(sorted_order.rbegin(), sorted_order.rend());
        std::vector<VertexId> shuffled_order = sorted_order;
        make_stream(mix_seed(seed, 300), pi).shuffle(shuffled_order);
        const std::vector<std::vector<VertexId>> orders{sorted_order, reversed_order,
                                                        shuffled_order};

        for (std::size_t oi = 0; oi < orders.size(); ++oi) {
            const std::uint64_t site = mix_seed(seed, 310 + pi * 8 + oi);
            std::vector<Histogram> parts(configured_threads(), Histogram(support));
            std::vector<std::uint8_t> invalid_parts(configured_threads(), 0);
            parallel_ranges(kSamples, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    RngStream rng = make_stream(site, i);
                    const InArboretum a = wilson_finite(g, root, orders[oi], rng);
                    if (i < 100 && validate_in_arborescence(g, edge_set(a), root).has_value()) {
                        invalid_parts[w] = 1;
                    }
                    parts[w].add(arboretum_key(a));
                }
            });
            Histogram hist(support);
            for (const Histogram& p : parts) hist.merge(p);
            bool invalid = false;
            for (std::uint8_t f : invalid_parts) invalid = invalid || f != 0;

            const double p = hist.unknown == 0 ? uniform_chi_square_p(hist.bins, kSamples) : 0.0;
            min_p = std::min(min_p, p);
            if (p <= 0.01 || invalid) {
                failures.push_back(Json{{"graph", ng->name},
                                        {"order", oi},
                                        {"p_value", p},
                                        {"invalid_sample", invalid}});
            }
        }
        ++graphs;
    }
    return {"wilson-uniform-and-order-invariant", failures.empty() && graphs >= 10,
            Json{{"graphs", graphs},
                 {"orders", 3},
                 {"samples_per_run", kSamples},
                 {"min_p_value", min_p},
                 {"failures", failures}}};
}

CheckResult check_window_vs_infinity(std::uint64_t seed) {
    const LazyDigraph g = ladder_family(2, 1);
    const ContractedDigraph window = contract_boundary(g, 8);
    const std::uint64_t kSamples = 100000;
    const std::uint64_t kHorizon = 10000;

    // Cylinder events: the arboretum keeps forward edge 0 at level 0 /
    // forward edge 3 at level 1 / both.
    struct Tally {
        std::uint64_t e0 = 0, e1 = 0, both = 0;
    };

    std::vector<Tally> window_parts(configured_threads());
    const std::uint64_t window_site = mix_seed(seed, 400);
    parallel_ranges(kSamples, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i) {
            RngStream rng = make_stream(window_site, i);
            const InArboretum a = sample_ua_exhaustion(window, rng);
            const bool h0 = a.edge_of.at(0) == 0;
            const bool h1 = a.edge_of.at(1) == 3;
            window_parts[w].e0 += h0;
            window_parts[w].e1 += h1;
            window_parts[w].both += h0 && h1;
        }
    });

    std::vector<Tally> inf_parts(configured_threads());
    std::vector<std::uint64_t> truncated_parts(configured_threads(), 0);
    const std::uint64_t inf_site = mix_seed(seed, 401);
    parallel_ranges(kSamples, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        WilsonInfinitySampler sampler(g);
        for (std::uint64_t i = b; i < e; ++i) {
            RngStream rng = make_stream(inf_site, i);
            sampler.reset();
            for (VertexId v : {VertexId{0}, VertexId{1}}) {
                std::size_t attempts = 0;
                while (!sampler.edge_at(v).has_value()) {
                    sampler.extend(v, kHorizon, rng);
                    if (!sampler.edge_at(v).has_value() && ++attempts >= 64) {
                        throw Error("arboretum tip failed to extend");
                    }
                }
                if (*sampler.flag_at(v) == EdgeFlag::Truncated) ++truncated_parts[w];
            }
            const bool h0 = *sampler.edge_at(0) == 0;
            const bool h1 = *sampler.edge_at(1) == 3;
            inf_parts[w].e0 += h0;
            inf_parts[w].e1 += h1;
            inf_parts[w].both += h0 && h1;
        }
    });

    Tally window_tally, inf_tally;
    std::uint64_t truncated = 0;
    for (const Tally& t : window_parts) {
        window_tally.e0 += t.e0;
        window_tally.e1 += t.e1;
        window_tally.both += t.both;
    }
    for (const Tally& t : inf_parts) {
        inf_tally.e0 += t.e0;
        inf_tally.e1 += t.e1;
        inf_tally.both += t.both;
    }
    for (std::uint64_t t : truncated_parts) truncated += t;

    const double n = static_cast<double>(kSamples);
    Json events = Json::array();
    bool pass = true;
    const std::pair<std::uint64_t, std::uint64_t> pairs[3] = {
        {window_tally.e0, inf_tally.e0},
        {window_tally.e1, inf_tally.e1},
        {window_tally.both, inf_tally.both}};
    const char* names[3] = {"level0-edge0", "level1-edge3", "joint"};
    for (int k = 0; k < 3; ++k) {
        const double p1 = static_cast<double>(pairs[k].first) / n;
        const double p2 = static_cast<double>(pairs[k].second) / n;
        const double se = std::sqrt(p1 * (1 - p1) / n + p2 * (1 - p2) / n);
        const bool ok = se > 0 ? std::abs(p1 - p2) <= 3 * se : p1 == p2;
        pass = pass && ok;
        events.push_back(Json{{"event", names[k]},
                              {"window_estimate", p1},
                              {"infinity_estimate", p2},
                              {"combined_se", se},
                              {"pass", ok}});
    }
    return {"window-vs-infinity-cylinders-agree", pass,
            Json{{"window_depth", window.depth},
                 {"horizon", kHorizon},
                 {"samples_per_side", kSamples},
                 {"truncated_flags", truncated},
                 {"events", events}}};
}

// ---------- suite: euler ----------

CheckResult check_euler_sampler_uniform(const std::vector<NamedGraph>& corpus,
                                        std::uint64_t seed) {
    std::vector<const NamedGraph*> pool;
    for (const NamedGraph& ng : corpus) {
        const BigInt n = count_eulerian_paths(ng.graph);
        if (n >= 2 && n <= 50) pool.push_back(&ng);
    }
    const auto picks = spread_indices(pool.size(), 10);

    const std::uint64_t kSamples = 100000;
    double min_p = 1.0;
    double max_tv = 0.0;
    Json failures = Json::array();
    std::size_t graphs = 0;

    for (std::size_t pi = 0; pi < picks.size(); ++pi) {
        const NamedGraph& ng = *pool[picks[pi]];
        const Digraph& g = ng.graph;
        std::vector<std::vector<EdgeId>> support;
        for (const Path& p : enumerate_eulerian_paths(g, 1000)) support.push_back(p.edges);

        const std::uint64_t site = mix_seed(seed, 500 + pi);
        std::vector<Histogram> parts(configured_threads(), Histogram(support));
        parallel_ranges(kSamples, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t i = b; i < e; ++i) {
                RngStream rng = make_stream(site, i);
                parts[w].add(sample_eulerian_finite(g, rng).edges);
            }
        });
        Histogram hist(support);
        for (const Histogram& p : parts) hist.merge(p);

        const double p = hist.unknown == 0 ? uniform_chi_square_p(hist.bins, kSamples) : 0.0;
        const double tv = total_variation_from_uniform(hist.bins, kSamples);
        min_p = std::min(min_p, p);
        max_tv = std::max(max_tv, tv);
        if (p <= 0.01 || tv >= 0.02) {
            failures.push_back(Json{{"graph", ng.name}, {"p_value", p}, {"tv", tv}});
        }
        ++graphs;
    }
    return {"euler-sampler-uniform", failures.empty() && graphs >= 10,
            Json{{"graphs", graphs},
                 {"samples_per_graph", kSamples},
                 {"min_p_value", min_p},
                 {"max_total_variation", max_tv},
                 {"failures", failures}}};
}

// Is `sub` a subsequence of `full`?
bool is_subsequence(const std::vector<EdgeId>& sub, const std::vector<EdgeId>& full) {
    std::size_t i = 0;
    for (EdgeId e : full) {
        if (i < sub.size() && sub[i] == e) ++i;
    }
    return i == sub.size();
}

// Shared invariants of a loop erasure.
bool loop_erase_invariants(const Path& walk, const Path& le) {
    if (le.start() != walk.start() || le.end() != walk.end()) return false;
    std::set<VertexId> distinct(le.vertices.begin(), le.vertices.end());
    if (distinct.size() != le.vertices.size()) return false;  // self-avoiding
    if (!(loop_erase(le) == le)) return false;                // idempotent
    return is_subsequence(le.edges, walk.edges);
}

// Pointer-chasing from every covered vertex must reach the walk's end
// without cycling.
bool last_exit_invariants(const Path& walk, const InArboretum& a) {
    std::set<VertexId> visited(walk.vertices.begin(), walk.vertices.end());
    if (a.cover != visited) return false;
    if (a.edge_of.count(walk.end()) != 0) return false;
    std::map<EdgeId, VertexId> edge_heads;
    for (std::size_t i = 0; i < walk.edges.size(); ++i) edge_heads[walk.edges[i]] = walk.vertices[i + 1];
    for (const auto& [v, e] : a.edge_of) {
        if (edge_heads.count(e) == 0) return false;  // edge never crossed by the walk
        VertexId at = v;
        std::size_t steps = 0;
        while (at != walk.end()) {
            const auto it = a.edge_of.find(at);
            if (it == a.edge_of.end()) return false;
            at = edge_heads.at(it->second);
            if (++steps > a.cover.size()) return false;  // cycle
        }
    }
    return true;
}

CheckResult check_round_trips(const std::vector<NamedGraph>& corpus, std::uint64_t seed) {
    // A spread of finite graphs plus the infinite ladder.
    std::vector<const NamedGraph*> pool;
    for (const NamedGraph& ng : corpus) {
        if (ng.graph.edge_count() >= 2) pool.push_back(&ng);
    }
    const auto picks = spread_indices(pool.size(), 20);
    const LazyDigraph ladder = ladder_family(2, 1);

    const std::uint64_t kPaths = 10000;
    const std::uint64_t site = mix_seed(seed, 600);
    std::uint64_t finite_paths = 0, lazy_paths = 0;
    Json failures = Json::array();

    for (std::uint64_t i = 0; i < kPaths; ++i) {
        RngStream rng = make_stream(site, i);
        const std::uint64_t len = 1 + rng.below(48);
        if (i % 4 == 3) {
            const VertexId start = rng.below(6);
            const WalkResult w = random_walk(ladder, start, fixed_length(len), rng);
            const Path le = loop_erase(w.path);
            const bool ok = loop_erase_invariants(w.path, le) &&
                            last_exit_invariants(w.path, last_exit_arboretum(w.path));
            if (!ok && failures.size() < 3) {
                failures.push_back(Json{{"kind", "ladder"}, {"index", i}});
            }
            ++lazy_paths;
        } else {
            const Digraph& g = pool[picks[i % picks.size()]]->graph;
            const VertexId start = rng.pick(g.vertices());
            const WalkResult w = random_walk(g, start, fixed_length(len), rng);
            const FollowResult replay =
                follow_stacks(g, w.path.start(), stacks_of_path(w.path), len + 1);
            const Path le = loop_erase(w.path);
            const bool ok = replay.path == w.path && loop_erase_invariants(w.path, le) &&
                            last_exit_invariants(w.path, last_exit_arboretum(w.path));
            if (!ok && failures.size() < 3) {
                failures.push_back(Json{{"kind", "finite"}, {"index", i}});
            }
            ++finite_paths;
        }
    }
    return {"round-trips-hold", failures.empty(),
            Json{{"finite_paths", finite_paths},
                 {"ladder_paths", lazy_paths},
                 {"failures", failures}}};
}

CheckResult check_last_exit_law(const std::vector<NamedGraph>& corpus, std::uint64_t seed) {
    // The final-departure arboretum of a uniform Eulerian path is uniform
    // over in-arborescences at the end vertex (it is the bottom-of-stack
    // arborescence of the path's stack encoding).
    std::vector<std::pair<const NamedGraph*, VertexId>> pool;
    for (const NamedGraph& ng : corpus) {
        const EulerianClassification cls = classify_eulerian(ng.graph);
        const BigInt arbs = count_in_arborescences(ng.graph, cls.end);
        const BigInt paths = count_eulerian_paths(ng.graph);
        if (arbs >= 2 && arbs <= 30 && paths >= 2) pool.emplace_back(&ng, cls.end);
    }
    const auto picks = spread_indices(pool.size(), 2);

    const std::uint64_t kSamples = 30000;
    double min_p = 1.0;
    Json rows = Json::array();
    bool pass = !picks.empty();
    for (std::size_t pi = 0; pi < picks.size(); ++pi) {
        const auto& [ng, root] = pool[picks[pi]];
        std::vector<std::vector<EdgeId>> support;
        for (const InArboretum& a : enumerate_in_arborescences(ng->graph, root, 1000)) {
            support.push_back(arboretum_key(a));
        }
        Histogram hist(support);
        const std::uint64_t site = mix_seed(seed, 700 + pi);
        for (std::uint64_t i = 0; i < kSamples; ++i) {
            RngStream rng = make_stream(site, i);
            hist.add(arboretum_key(last_exit_arboretum(sample_eulerian_finite(ng->graph, rng))));
        }
        const double p = hist.unknown == 0 ? uniform_chi_square_p(hist.bins, kSamples) : 0.0;
        min_p = std::min(min_p, p);
        pass = pass && p > 0.001;
        rows.push_back(Json{{"graph", ng->name}, {"p_value", p}});
    }
    return {"last-exit-law-matches-uniform-arborescence", pass,
            Json{{"graphs", rows}, {"min_p_value", min_p}, {"samples_per_graph", kSamples}}};
}

// ---------- suite: pex ----------

CheckResult check_conditioned_sampler(std::uint64_t seed) {
    struct Instance {
        const char* name;
        State start;
        std::vector<std::tuple<State, State, std::uint64_t>> entries;
    };
    const std::vector<Instance> instances = {
        {"loop-pair", "0", {{"0", "0", 1}, {"0", "1", 1}, {"1", "0", 1}}},
        {"two-petals", "0", {{"0", "1", 1}, {"1", "0", 1}, {"0", "2", 1}, {"2", "0", 1}}},
        {"doubled-edge", "0", {{"0", "1", 2}, {"1", "0", 1}, {"1", "2", 1}, {"2", "0", 1}}},
        {"petal-mix", "0", {{"0", "1", 2}, {"1", "0", 2}, {"0", "2", 1}, {"2", "0", 1}}},
        {"two-triangles",
         "a",
         {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}, {"a", "c", 1}, {"c", "b", 1}, {"b", "a", 1}}},
    };

    const std::uint64_t kSamples = 100000;
    Json rows = Json::array();
    bool pass = true;
    double min_p = 1.0;

    for (std::size_t k = 0; k < instances.size(); ++k) {
        const Instance& inst = instances[k];
        TransitionCounts tc;
        tc.start = inst.start;
        for (const auto& [u, v, m] : inst.entries) tc.counts[{u, v}] = m;
        const CountsDigraph cd = digraph_from_counts(tc);
        const BigInt members = count_class_members(tc);

        // Drawing from the conditional law must reproduce the counts exactly.
        bool identity_ok = true;
        const std::uint64_t id_site = mix_seed(seed, 800 + k);
        for (std::uint64_t i = 0; i < 1000 && identity_ok; ++i) {
            RngStream rng = make_stream(id_site, i);
            identity_ok = transition_counts(condition_on_counts(cd, rng)) == tc;
        }

        const SequenceSampler sampler = [&cd](RngStream& rng) {
            return condition_on_counts(cd, rng);
        };
        const PexTestReport report = test_partial_exchangeability(
            sampler, static_cast<std::size_t>(tc.total()), kSamples, mix_seed(seed, 820 + k));
        min_p = std::min(min_p, report.p_value);
        const bool ok =
            identity_ok && members >= 2 && report.p_value > 0.01 && report.classes_tested >= 1;
        pass = pass && ok;
        rows.push_back(Json{{"instance", inst.name},
                            {"class_members", decimal_string(members)},
                            {"identity_ok", identity_ok},
                            {"p_value", report.p_value},
                            {"classes_tested", report.classes_tested}});
    }

    // Sharp two-member frequency bound on the first instance: the sequence
    // 0,0,1,0 and its swap 0,1,0,0 are the whole class, so each must come up
    // half the time.
    {
        TransitionCounts tc;
        tc.start = "0";
        tc.counts[{"0", "0"}] = 1;
        tc.counts[{"0", "1"}] = 1;
        tc.counts[{"1", "0"}] = 1;
        const CountsDigraph cd = digraph_from_counts(tc);
        const std::vector<State> target{"0", "0", "1", "0"};
        std::uint64_t hits = 0;
        const std::uint64_t site = mix_seed(seed, 840);
        for (std::uint64_t i = 0; i < kSamples; ++i) {
            RngStream rng = make_stream(site, i);
            hits += condition_on_counts(cd, rng) == target;
        }
        const double freq = static_cast<double>(hits) / static_cast<double>(kSamples);
        const bool ok = std::abs(freq - 0.5) <= 0.005;
        pass = pass && ok;
        rows.push_back(Json{{"instance", "loop-pair-frequency"},
                            {"frequency", freq},
                            {"bound", 0.005},
                            {"pass", ok}});
    }

    return {"conditioned-sampler-partially-exchangeable", pass,
            Json{{"instances", rows}, {"min_p_value", min_p}, {"samples_per_instance", kSamples}}};
}

// ---------- suite: gibbs ----------

CheckResult check_prefix_matches_window(std::uint64_t seed) {
    const LazyDigraph g = ladder_family(2, 1);
    const std::size_t kPrefix = 4;
    const std::uint64_t kHorizon = 10000;
    const std::uint64_t kSamples = 100000;

    // Reference law: enumerate the depth-6 window's Eulerian paths and
    // marginalize onto the first 4 edges.  Within 4 steps of the source the
    // window and the infinite graph have identical prefix laws.
    const ContractedDigraph window = contract_boundary(g, 6);
    std::map<std::vector<EdgeId>, std::uint64_t> prefix_counts;
    std::uint64_t total_paths = 0;
    for (const Path& p : enumerate_eulerian_paths(window.graph, 5000)) {
        ++prefix_counts[std::vector<EdgeId>(p.edges.begin(), p.edges.begin() + kPrefix)];
        ++total_paths;
    }

    std::vector<std::vector<EdgeId>> support;
    for (const auto& [key, n] : prefix_counts) support.push_back(key);

    std::vector<Histogram> parts(configured_threads(), Histogram(support));
    std::vector<std::uint64_t> taint_parts(configured_threads(), 0);
    const std::uint64_t site = mix_seed(seed, 900);
    parallel_ranges(kSamples, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        GibbsPrefixSampler sampler(g, kHorizon);
        for (std::uint64_t i = b; i < e; ++i) {
            RngStream rng = make_stream(site, i);
            const GibbsPrefixSample s = sampler.sample(kPrefix, rng);
            parts[w].add(s.path.edges);
            taint_parts[w] += !s.truncated_stack_vertices.empty();
        }
    });
    Histogram hist(support);
    for (const Histogram& p : parts) hist.merge(p);
    std::uint64_t tainted = 0;
    for (std::uint64_t t : taint_parts) tainted += t;

    double stat = 0.0;
    for (std::size_t j = 0; j < support.size(); ++j) {
        const double expected = static_cast<double>(prefix_counts.at(support[j])) /
                                static_cast<double>(total_paths) * static_cast<double>(kSamples);
        const double d = static_cast<double>(hist.bins[j]) - expected;
        stat += d * d / expected;
    }
    const double p = hist.unknown == 0
                         ? chi_square_p_value(stat, static_cast<double>(support.size() - 1))
                         : 0.0;
    const double taint_rate = static_cast<double>(tainted) / static_cast<double>(kSamples);
    const bool pass = p > 0.01 && taint_rate <= 0.01 && hist.unknown == 0;

    return {"prefix-sampler-matches-window-law", pass,
            Json{{"prefix_classes", support.size()},
                 {"window_paths", total_paths},
                 {"p_value", p},
                 {"tainted_samples", tainted},
                 {"taint_rate", taint_rate},
                 {"outside_support", hist.unknown},
                 {"samples", kSamples},
                 {"horizon", kHorizon}}};
}

CheckResult check_gibbs_property(const std::vector<NamedGraph>& corpus, std::uint64_t seed) {
    // Graphs where some suffix class has at least two completions, so the
    // conditional test is informative.
    std::vector<std::pair<const NamedGraph*, std::size_t>> picks;
    for (const NamedGraph& ng : corpus) {
        if (picks.size() >= 5) break;
        const std::size_t m = ng.graph.edge_count();
        if (m < 4) continue;
        const BigInt paths = count_eulerian_paths(ng.graph);
        if (paths < 4 || paths > 60) continue;
        const std::size_t cut = m / 2;
        std::map<std::vector<EdgeId>, std::uint64_t> by_suffix;
        for (const Path& p : enumerate_eulerian_paths(ng.graph, 100)) {
            ++by_suffix[std::vector<EdgeId>(p.edges.begin() + cut, p.edges.end())];
        }
        bool multi = false;
        for (const auto& [s, n] : by_suffix) multi = multi || n >= 2;
        if (multi) picks.emplace_back(&ng, cut);
    }

    const std::uint64_t kSamples = 100000;
    Json rows = Json::array();
    bool pass = picks.size() >= 5;
    double min_p = 1.0;
    for (std::size_t k = 0; k < picks.size(); ++k) {
        const auto& [ng, cut] = picks[k];
        const PexTestReport report =
            test_gibbs_property(ng->graph, cut, kSamples, mix_seed(seed, 1000 + k));
        min_p = std::min(min_p, report.p_value);
        const bool ok = report.p_value > 0.01 && report.classes_tested >= 1;
        pass = pass && ok;
        rows.push_back(Json{{"graph", ng->name},
                            {"cut", cut},
                            {"p_value", report.p_value},
                            {"classes_tested", report.classes_tested}});
    }
    return {"uniform-euler-law-has-gibbs-property", pass,
            Json{{"graphs", rows}, {"min_p_value", min_p}, {"samples_per_graph", kSamples}}};
}

// ---------- suite: transience ----------

CheckResult check_return_probability(std::uint64_t seed) {
    const std::uint64_t kSamples = 100000;
    const std::uint64_t kHorizon = 10000;
    Json rows = Json::array();
    bool pass = true;
    const unsigned ps[3] = {2, 3, 5};
    for (int k = 0; k < 3; ++k) {
        const unsigned p = ps[k];
        const LazyDigraph g = ladder_family(p, p - 1);
        const ReturnEstimate est =
            estimate_return_probability(g, 0, kSamples, kHorizon, mix_seed(seed, 1100 + k));
        // In/out flow bound: return probability at most (p-1)/p.
        const double bound = static_cast<double>(p - 1) / static_cast<double>(p);
        const bool ok = est.estimate <= bound + 3 * est.half_width_99;
        pass = pass && ok;
        rows.push_back(Json{{"family", "ladder:" + std::to_string(p) + "," + std::to_string(p - 1)},
                            {"estimate", est.estimate},
                            {"bound", bound},
                            {"half_width_99", est.half_width_99},
                            {"horizon_hits", est.horizon_hits},
                            {"pass", ok}});
    }
    return {"ladder-return-probability-bounded", pass,
            Json{{"families", rows}, {"samples", kSamples}, {"horizon", kHorizon}}};
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"best", "wilson", "euler", "pex", "gibbs", "transience"};
}

namespace {

// Runs the checks in order, stamping each result with its wall time.
std::vector<CheckResult> timed(std::vector<std::function<CheckResult()>> checks) {
    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (auto& check : checks) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r = check();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed) {
    if (suite == "best") {
        const auto corpus = exhaustive_eulerian_corpus(6);
        const auto random_corpus = random_eulerian_corpus(100, 10, seed);
        return timed({[&] { return check_count_matches_enumeration(corpus, random_corpus); },
                      [&] { return check_arborescence_count(corpus, random_corpus); },
                      [&] { return check_stack_characterization(corpus); }});
    }
    if (suite == "wilson") {
        const auto corpus = exhaustive_eulerian_corpus(6);
        return timed({[&] { return check_wilson_uniformity(corpus, seed); },
                      [&] { return check_window_vs_infinity(seed); }});
    }
    if (suite == "euler") {
        const auto corpus = exhaustive_eulerian_corpus(6);
        return timed({[&] { return check_euler_sampler_uniform(corpus, seed); },
                      [&] { return check_round_trips(corpus, seed); },
                      [&] { return check_last_exit_law(corpus, seed); }});
    }
    if (suite == "pex") {
        return timed({[&] { return check_conditioned_sampler(seed); }});
    }
    if (suite == "gibbs") {
        const auto corpus = exhaustive_eulerian_corpus(6);
        return timed({[&] { return check_prefix_matches_window(seed); },
                      [&] { return check_gibbs_property(corpus, seed); }});
    }
    if (suite == "transience") {
        return timed({[&] { return check_return_probability(seed); }});
    }
    throw Error("unknown verify suite: " + suite);
}

}  // namespace eulerpath
