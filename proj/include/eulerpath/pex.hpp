#ifndef EULERPATH_PEX_HPP
#define EULERPATH_PEX_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eulerpath/arborescence.hpp"
#include "eulerpath/digraph.hpp"
#include "eulerpath/rng.hpp"

namespace eulerpath {

using State = std::string;

// A start state plus the multiset of observed transitions; two finite state
// sequences are exchangeable-equivalent iff these agree (same start, same
// count for every ordered pair, hence same length and same end).
struct TransitionCounts {
    State start;
    std::map<std::pair<State, State>, std::uint64_t> counts;

    std::uint64_t total() const;
    friend bool operator==(const TransitionCounts&, const TransitionCounts&) = default;
};

// Tally a sequence into counts; throws EmptySequence on an empty input.
TransitionCounts transition_counts(const std::vector<State>& seq);

bool pex_equivalent(const std::vector<State>& x, const std::vector<State>& y);

// Empirical transition matrix Q(u, v) = (#transitions u->v) / (#visits to u
// before the final position); needs at least one transition.
std::map<std::pair<State, State>, double> transition_frequencies(const std::vector<State>& seq);

// The counts digraph: one vertex per state, m parallel edges u->v when
// counts[u][v] = m.  Vertex ids are dense ranks of the sorted state tokens;
// edge ids enumerate the count entries in sorted order.  The end state is
// forced by the degree imbalance (NoEulerianEndpoint when none fits) and a
// disconnected support raises DisconnectedCounts.
struct CountsDigraph {
    Digraph graph;
    std::vector<State> states;        // dense vertex id -> token
    std::map<State, VertexId> ids;    // token -> vertex id
    State end;
};

CountsDigraph digraph_from_counts(const TransitionCounts& c);

// One draw from the uniform distribution over state sequences with exactly
// these transition counts: sample a uniform Eulerian path of the counts
// digraph and project it to states.  Uniformity over sequences holds because
// each sequence is realized by the same number of edge paths (the product of
// count factorials).
std::vector<State> condition_on_counts(const CountsDigraph& cd, RngStream& rng);
std::vector<State> condition_on_counts(const TransitionCounts& c, RngStream& rng);

// Every state sequence sharing the given counts, in lexicographic order, by
// backtracking over remaining counts.  Throws CapExceeded past `cap`.
std::vector<std::vector<State>> enumerate_class_members(const TransitionCounts& c,
                                                        std::uint64_t cap);

// Number of class members without enumeration: Eulerian path count of the
// counts digraph divided by the product of count factorials.
BigInt count_class_members(const TransitionCounts& c);

struct PexTestReport {
    std::size_t classes_tested;  // equivalence classes that met the sample threshold
    double statistic;
    double dof;
    double p_value;
    std::uint64_t samples;
};

using SequenceSampler = std::function<std::vector<State>(RngStream&)>;

// Chi-square test that `sampler` is partially exchangeable on its first
// `prefix_len` transitions: draw `samples` sequences on independent streams
// of `seed`, bucket prefixes by equivalence class, and within every class
// whose expected per-member count reaches `min_expected` compare the
// observed member frequencies against uniform.  Classes with one member are
// vacuous; if no class qualifies at all, throws InsufficientSamples.
PexTestReport test_partial_exchangeability(const SequenceSampler& sampler, std::size_t prefix_len,
                                           std::uint64_t samples, std::uint64_t seed,
                                           std::uint64_t min_expected = 20);

// Chi-square test of the Gibbs property of the uniform Eulerian path law on
// g: conditionally on the suffix from position `cut`, the prefix must be
// uniform over the Eulerian paths of the complement subgraph ending where
// the suffix starts.
PexTestReport test_gibbs_property(const Digraph& g, std::size_t cut, std::uint64_t samples,
                                  std::uint64_t seed, std::uint64_t min_expected = 20);

}  // namespace eulerpath

#endif  // EULERPATH_PEX_HPP
