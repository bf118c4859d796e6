#include "eulerpath/path.hpp"

#include <string>
#include <unordered_map>

namespace eulerpath {

void validate_path(const Digraph& g, const Path& p) {
    if (p.vertices.empty()) throw Error("path has no vertices");
    if (p.vertices.size() != p.edges.size() + 1) {
        throw Error("path does not alternate: " + std::to_string(p.vertices.size()) +
                    " vertices vs " + std::to_string(p.edges.size()) + " edges");
    }
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const EdgeSpec& e = g.spec(p.edges[i]);
        if (e.tail != p.vertices[i] || e.head != p.vertices[i + 1]) {
            throw Error("edge " + std::to_string(e.id) + " does not connect step " +
                        std::to_string(i) + " of the path");
        }
    }
    if (!g.has_vertex(p.vertices.front())) throw UnknownVertex(p.vertices.front());
}

Path loop_erase(const Path& p) {
    if (p.vertices.empty()) throw Error("cannot loop-erase an empty path");
    std::unordered_map<VertexId, std::size_t> last_visit;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) last_visit[p.vertices[i]] = i;

    Path result;
    std::size_t t = 0;
    result.vertices.push_back(p.vertices[0]);
    while (t + 1 < p.vertices.size()) {
        // Jump past every later return to the current vertex; the departure
        // that survives is the final one.
        const std::size_t last = last_visit[p.vertices[t]];
        if (last + 1 == p.vertices.size()) break;  // the walk ends here: the rest is one closing loop
        result.edges.push_back(p.edges[last]);
        result.vertices.push_back(p.vertices[last + 1]);
        t = last + 1;
    }
    return result;
}

StackConfiguration stacks_of_path(const Path& p) {
    StackConfiguration stacks;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        stacks[p.vertices[i]].push_back(p.edges[i]);
    }
    return stacks;
}

FollowResult follow_stacks(const Digraph& g, VertexId start, const StackConfiguration& stacks,
                           std::uint64_t step_cap) {
    Path path;
    path.vertices.push_back(start);
    std::unordered_map<VertexId, std::size_t> cursor;  // next position in each stack

    VertexId at = start;
    for (std::uint64_t step = 0; step < step_cap; ++step) {
        auto it = stacks.find(at);
        if (it == stacks.end()) return {std::move(path), false};
        std::size_t& pos = cursor[at];
        if (pos >= it->second.size()) return {std::move(path), false};
        const EdgeId e = it->second[pos++];
        if (g.tail(e) != at) {
            throw Error("stack at vertex " + std::to_string(at) + " holds edge " +
                        std::to_string(e) + " which does not leave it");
        }
        at = g.head(e);
        path.edges.push_back(e);
        path.vertices.push_back(at);
    }
    return {std::move(path), true};
}

}  // namespace eulerpath
