#ifndef EULERPATH_ERRORS_HPP
#define EULERPATH_ERRORS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace eulerpath {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateEdgeId : Error {
    explicit DuplicateEdgeId(std::uint64_t id)
        : Error("duplicate edge id " + std::to_string(id)), id(id) {}
    std::uint64_t id;
};

struct EmptyGraph : Error {
    EmptyGraph() : Error("graph has no vertices") {}
};

struct UnknownVertex : Error {
    explicit UnknownVertex(std::uint64_t v)
        : Error("unknown vertex " + std::to_string(v)), vertex(v) {}
    std::uint64_t vertex;
};

struct UnknownEdge : Error {
    explicit UnknownEdge(std::uint64_t e)
        : Error("unknown edge " + std::to_string(e)), edge(e) {}
    std::uint64_t edge;
};

// Degree/reachability witness attached to classification failures.
struct DegreeWitness {
    std::uint64_t vertex;
    std::size_t in_degree;
    std::size_t out_degree;
};

struct NotEulerianInput : Error {
    explicit NotEulerianInput(std::optional<DegreeWitness> w = std::nullopt)
        : Error("input digraph is not Eulerian"), witness(w) {}
    std::optional<DegreeWitness> witness;
};

struct CapExceeded : Error {
    explicit CapExceeded(std::uint64_t cap)
        : Error("enumeration exceeded cap " + std::to_string(cap)), cap(cap) {}
    std::uint64_t cap;
};

struct RootUnreachable : Error {
    explicit RootUnreachable(std::uint64_t v)
        : Error("vertex " + std::to_string(v) + " cannot reach the root"), vertex(v) {}
    std::uint64_t vertex;
};

struct ExhaustionUnavailable : Error {
    explicit ExhaustionUnavailable(std::size_t n)
        : Error("exhaustion set V_" + std::to_string(n) + " is unavailable or empty"), index(n) {}
    std::size_t index;
};

struct OracleInconsistency : Error {
    using Error::Error;
};

struct EmptySequence : Error {
    EmptySequence() : Error("sequence is empty") {}
};

struct NoEulerianEndpoint : Error {
    explicit NoEulerianEndpoint(std::string why)
        : Error("transition counts admit no Eulerian endpoint: " + why) {}
};

struct DisconnectedCounts : Error {
    DisconnectedCounts() : Error("transition counts span a disconnected digraph") {}
};

struct InsufficientSamples : Error {
    using Error::Error;
};

// The followed stack path died before reaching the requested length.
struct StackExhausted : Error {
    StackExhausted(std::size_t steps_taken, bool tainted)
        : Error("stack path exhausted after " + std::to_string(steps_taken) + " steps" +
                (tainted ? " (horizon-truncated stacks were involved)" : "")),
          steps_taken(steps_taken),
          tainted(tainted) {}
    std::size_t steps_taken;
    bool tainted;
};

struct ParseError : Error {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace eulerpath

#endif  // EULERPATH_ERRORS_HPP
