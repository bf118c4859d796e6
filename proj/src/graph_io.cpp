#include "eulerpath/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace eulerpath {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& raw) {
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t begin = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(begin, i - begin), begin + 1});
    }
    return tokens;
}

std::uint64_t parse_u64(const Token& t, std::size_t line) {
    std::uint64_t value = 0;
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line, t.column, "expected unsigned integer, got '" + t.text + "'");
    }
    return value;
}

unsigned parse_unsigned(const Token& t, std::size_t line) {
    const std::uint64_t v = parse_u64(t, line);
    if (v > std::numeric_limits<unsigned>::max()) {
        throw ParseError(line, t.column, "value " + t.text + " is too large");
    }
    return static_cast<unsigned>(v);
}

void require_arity(const std::vector<Token>& tokens, std::size_t n, std::size_t line) {
    if (tokens.size() < n) {
        throw ParseError(line, tokens.front().column,
                         "directive '" + tokens.front().text + "' takes " + std::to_string(n - 1) +
                             " argument(s)");
    }
    if (tokens.size() > n) {
        throw ParseError(line, tokens[n].column, "unexpected token '" + tokens[n].text + "'");
    }
}

}  // namespace

const Digraph& GraphInput::require_finite() const& {
    if (!finite) throw Error("this command requires a finite graph, not a generated family");
    return *finite;
}

GraphInput parse_graph_text(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool header_seen = false;

    std::vector<EdgeSpec> edges;
    std::unordered_set<EdgeId> edge_ids;
    std::optional<VertexId> source, sink;
    std::optional<std::pair<unsigned, unsigned>> family;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::vector<Token> tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const Token& head = tokens.front();

        if (!header_seen) {
            if (head.text != "eulergraph") {
                throw ParseError(line_no, head.column, "expected header 'eulergraph 1'");
            }
            require_arity(tokens, 2, line_no);
            if (tokens[1].text != "1") {
                throw ParseError(line_no, tokens[1].column,
                                 "unsupported format version '" + tokens[1].text + "'");
            }
            header_seen = true;
            continue;
        }

        if (head.text == "edge") {
            require_arity(tokens, 4, line_no);
            const EdgeId id = parse_u64(tokens[1], line_no);
            if (!edge_ids.insert(id).second) {
                throw ParseError(line_no, tokens[1].column,
                                 "duplicate edge id " + tokens[1].text);
            }
            edges.push_back({id, parse_u64(tokens[2], line_no), parse_u64(tokens[3], line_no)});
        } else if (head.text == "source") {
            require_arity(tokens, 2, line_no);
            if (source) throw ParseError(line_no, head.column, "duplicate source directive");
            source = parse_u64(tokens[1], line_no);
        } else if (head.text == "sink") {
            require_arity(tokens, 2, line_no);
            if (sink) throw ParseError(line_no, head.column, "duplicate sink directive");
            sink = parse_u64(tokens[1], line_no);
        } else if (head.text == "family") {
            require_arity(tokens, 4, line_no);
            if (tokens[1].text != "ladder") {
                throw ParseError(line_no, tokens[1].column,
                                 "unknown family '" + tokens[1].text + "'");
            }
            if (family) throw ParseError(line_no, head.column, "duplicate family directive");
            const unsigned p = parse_unsigned(tokens[2], line_no);
            const unsigned q = parse_unsigned(tokens[3], line_no);
            if (p == 0) {
                throw ParseError(line_no, tokens[2].column,
                                 "ladder family needs at least one forward edge per level");
            }
            family = {p, q};
        } else {
            throw ParseError(line_no, head.column, "unknown directive '" + head.text + "'");
        }

        if (family && (!edges.empty() || source || sink)) {
            throw ParseError(line_no, head.column,
                             "family graphs take no explicit edge/source/sink directives");
        }
    }

    if (!header_seen) throw ParseError(line_no + 1, 1, "expected header 'eulergraph 1'");

    GraphInput out;
    if (family) {
        out.lazy = ladder_family_shared(family->first, family->second);
        out.family_p = family->first;
        out.family_q = family->second;
        return out;
    }
    if (!source) throw ParseError(line_no + 1, 1, "missing source directive");
    out.finite = build_digraph(std::move(edges), *source, sink);
    return out;
}

GraphInput read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return parse_graph_text(in);
}

void write_graph_text(std::ostream& out, const Digraph& g) {
    out << "eulergraph 1\n";
    out << "source " << g.source() << "\n";
    if (g.sink()) out << "sink " << *g.sink() << "\n";
    for (EdgeId e : g.edge_ids()) {
        const EdgeSpec& s = g.spec(e);
        out << "edge " << s.id << " " << s.tail << " " << s.head << "\n";
    }
}

TransitionCounts parse_counts_text(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    TransitionCounts c;
    bool start_seen = false;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::vector<Token> tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const Token& head = tokens.front();

        if (!start_seen) {
            if (head.text != "start") {
                throw ParseError(line_no, head.column, "expected 'start <state>' first");
            }
            require_arity(tokens, 2, line_no);
            c.start = tokens[1].text;
            start_seen = true;
            continue;
        }
        if (head.text == "start") {
            throw ParseError(line_no, head.column, "duplicate start directive");
        }
        if (head.text != "count") {
            throw ParseError(line_no, head.column, "unknown directive '" + head.text + "'");
        }
        require_arity(tokens, 4, line_no);
        const std::uint64_t m = parse_u64(tokens[3], line_no);
        if (m > 0) c.counts[{tokens[1].text, tokens[2].text}] += m;
    }
    if (!start_seen) throw ParseError(line_no + 1, 1, "expected 'start <state>' first");
    return c;
}

TransitionCounts read_counts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open counts file: " + path);
    return parse_counts_text(in);
}

std::vector<std::vector<State>> parse_sequences_text(std::istream& in) {
    std::vector<std::vector<State>> out;
    std::string raw;
    while (std::getline(in, raw)) {
        const std::vector<Token> tokens = tokenize(raw);
        if (tokens.empty()) continue;
        std::vector<State> seq;
        seq.reserve(tokens.size());
        for (const Token& t : tokens) seq.push_back(t.text);
        out.push_back(std::move(seq));
    }
    return out;
}

std::vector<std::vector<State>> read_sequences_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open sequences file: " + path);
    return parse_sequences_text(in);
}

std::pair<unsigned, unsigned> parse_ladder_family(const std::string& text) {
    const Error bad("invalid family '" + text + "'; expected ladder:P,Q");
    const std::string prefix = "ladder:";
    if (text.rfind(prefix, 0) != 0) throw bad;
    const std::string rest = text.substr(prefix.size());
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw bad;
    auto parse = [&](const std::string& s) -> unsigned {
        unsigned v = 0;
        const char* begin = s.data();
        const char* end = begin + s.size();
        const auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr != end || s.empty()) throw bad;
        return v;
    };
    const unsigned p = parse(rest.substr(0, comma));
    const unsigned q = parse(rest.substr(comma + 1));
    if (p == 0) throw Error("family ladder:" + rest + " needs at least one forward edge");
    return {p, q};
}

std::string file_digest_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::uint64_t h = 14695981039346656037ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (!in) break;
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << h;
    return hex.str();
}

}  // namespace eulerpath
