#ifndef EULERPATH_VERIFY_HPP
#define EULERPATH_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eulerpath/digraph.hpp"
#include "eulerpath/serialize.hpp"

namespace eulerpath {

struct CheckResult {
    std::string name;
    bool pass;
    Json details;
    // Wall time of the check; informational only and deliberately kept out of
    // serialized manifests so repeated runs stay byte-identical.
    double seconds = 0.0;
};

struct NamedGraph {
    std::string name;
    Digraph graph;
};

// Every Eulerian digraph with at most `max_edges` edges, up to relabeling:
// each one is the graph of its own Eulerian path, so walking all canonical
// walk sequences (first-visit labels) and deduplicating edge multisets
// enumerates them exhaustively.  Vertex 0 is the start; edge ids follow the
// sorted (tail, head) pairs.
std::vector<NamedGraph> exhaustive_eulerian_corpus(std::size_t max_edges);

// `count` random Eulerian digraphs with 7..max_edges edges (same walk-based
// construction, random tokens), deduplicated, path count capped so
// enumeration stays cheap.
std::vector<NamedGraph> random_eulerian_corpus(std::size_t count, std::size_t max_edges,
                                               std::uint64_t seed);

// The named check suites behind `verify --suite`.  Each returns its checks
// in a fixed order; the same (suite, seed) pair always produces identical
// results.
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed);

}  // namespace eulerpath

#endif  // EULERPATH_VERIFY_HPP
