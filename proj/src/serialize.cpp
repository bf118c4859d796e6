#include "eulerpath/serialize.hpp"

#include <sstream>

namespace eulerpath {

Json json_of_path(const Path& p) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        arr.push_back(p.vertices[i]);
        if (i < p.edges.size()) arr.push_back(p.edges[i]);
    }
    return arr;
}

Json json_of_stacks(const StackConfiguration& s) {
    Json obj = Json::object();
    for (const auto& [v, stack] : s) obj[std::to_string(v)] = stack;
    return obj;
}

Json json_of_arboretum(const InArboretum& a) {
    Json edges = Json::object();
    for (const auto& [v, e] : a.edge_of) edges[std::to_string(v)] = e;
    Json cover = Json::array();
    for (VertexId v : a.cover) cover.push_back(v);
    return Json{{"edges", edges}, {"cover", cover}};
}

Json json_of_partial(const PartialArboretum& a) {
    Json edges = Json::object();
    for (const auto& [v, e] : a.edge_of) edges[std::to_string(v)] = e;
    Json flags = Json::object();
    for (const auto& [v, f] : a.flags) {
        flags[std::to_string(v)] = f == EdgeFlag::Exact ? "exact" : "truncated";
    }
    return Json{{"edges", edges}, {"flags", flags}, {"horizon", a.horizon}};
}

Json json_of_report(const PexTestReport& r) {
    return Json{{"classes", r.classes_tested},
                {"statistic", r.statistic},
                {"dof", r.dof},
                {"p_value", r.p_value},
                {"samples", r.samples}};
}

Json json_of_return(const ReturnEstimate& r) {
    return Json{{"point_estimate", r.estimate},
                {"half_width_99", r.half_width_99},
                {"samples", r.samples},
                {"horizon", r.horizon},
                {"returned", r.returned},
                {"horizon_hits", r.horizon_hits}};
}

Json json_of_gibbs(const GibbsPrefixSample& s) {
    return Json{{"path", json_of_path(s.path)},
                {"horizon", s.horizon_used},
                {"truncated", !s.truncated_stack_vertices.empty()},
                {"truncated_stack_vertices", s.truncated_stack_vertices},
                {"covered_edge_count", s.covered_edge_count}};
}

Json json_of_witness(const DegreeWitness& w) {
    return Json{{"vertex", w.vertex}, {"in_degree", w.in_degree}, {"out_degree", w.out_degree}};
}

Json json_of_classification(const EulerianClassification& c) {
    const char* kind = nullptr;
    switch (c.kind) {
        case EulerianKind::FiniteSourceSink: kind = "source-sink"; break;
        case EulerianKind::FiniteCircuitRoot: kind = "circuit"; break;
        case EulerianKind::InfiniteSourced: kind = "sourced-infinite"; break;
        case EulerianKind::NotEulerian: kind = "not-eulerian"; break;
    }
    Json out{{"kind", kind}};
    if (c.kind != EulerianKind::NotEulerian) {
        out["start"] = c.start;
        out["end"] = c.end;
    }
    if (c.witness) out["witness"] = json_of_witness(*c.witness);
    return out;
}

std::string decimal_string(const BigInt& n) {
    std::ostringstream s;
    s << n;
    return s.str();
}

}  // namespace eulerpath
