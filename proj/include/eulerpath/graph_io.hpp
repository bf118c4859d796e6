#ifndef EULERPATH_GRAPH_IO_HPP
#define EULERPATH_GRAPH_IO_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eulerpath/digraph.hpp"
#include "eulerpath/lazy_digraph.hpp"
#include "eulerpath/pex.hpp"

namespace eulerpath {

// Result of reading a graph file: either an explicit finite digraph or a
// generated infinite family (exactly one is set).
struct GraphInput {
    std::optional<Digraph> finite;
    std::shared_ptr<LazyDigraph> lazy;
    unsigned family_p = 0;  // valid iff lazy
    unsigned family_q = 0;

    bool is_finite() const { return finite.has_value(); }
    // The finite graph, or a diagnostic Error for family inputs.  Lvalue-only:
    // calling this on a temporary would hand out a dangling reference.
    const Digraph& require_finite() const&;
    const Digraph& require_finite() const&& = delete;
};

// Text format, one directive per line, '#' starts a comment:
//   eulergraph 1              header, required first
//   edge <id> <tail> <head>   ids unique, all values unsigned
//   source <v>                required (exactly once) unless a family is given
//   sink <v>                  optional, at most once
//   family ladder <p> <q>     generated family; excludes edge/source/sink
// Errors are reported as ParseError with 1-based line and column.
GraphInput parse_graph_text(std::istream& in);
GraphInput read_graph_file(const std::string& path);

void write_graph_text(std::ostream& out, const Digraph& g);

// Transition-count files:
//   start <state>             required first
//   count <u> <v> <m>         repeated pairs accumulate
TransitionCounts parse_counts_text(std::istream& in);
TransitionCounts read_counts_file(const std::string& path);

// One whitespace-separated state sequence per line; blank and comment lines
// are skipped.
std::vector<std::vector<State>> parse_sequences_text(std::istream& in);
std::vector<std::vector<State>> read_sequences_file(const std::string& path);

// Parse "ladder:P,Q" (the --family grammar); throws Error on anything else.
std::pair<unsigned, unsigned> parse_ladder_family(const std::string& text);

// FNV-1a digest of a file's bytes as 16 hex digits, for run manifests.
std::string file_digest_hex(const std::string& path);

}  // namespace eulerpath

#endif  // EULERPATH_GRAPH_IO_HPP
