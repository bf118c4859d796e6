#include "eulerpath/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "eulerpath/euler.hpp"
#include "eulerpath/graph_io.hpp"
#include "eulerpath/parallel.hpp"
#include "eulerpath/pex.hpp"
#include "eulerpath/serialize.hpp"
#include "eulerpath/verify.hpp"
#include "eulerpath/walks.hpp"
#include "eulerpath/wilson.hpp"

namespace eulerpath {

namespace {

struct CommandContext {
    std::string command;
    Json inputs = Json::object();
    std::optional<std::uint64_t> seed;
};

void emit_manifest(std::ostream& out, const CommandContext& ctx, const Json& outputs) {
    Json manifest{{"schema_version", 1},
                  {"command", ctx.command},
                  {"inputs", ctx.inputs},
                  {"outputs", outputs}};
    manifest["seed"] = ctx.seed ? Json(*ctx.seed) : Json(nullptr);
    out << manifest.dump(2) << '\n';
}

Json file_input(const std::string& path) {
    return Json{{"path", path}, {"digest", file_digest_hex(path)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact samplers and verifiers for Eulerian paths, spanning in-arborescences, "
                 "and their infinite-graph limits"};
    app.require_subcommand(1);

    std::string graph_path, counts_path, family_text, suite;
    std::uint64_t samples = 1, seed = 1, horizon = 10000, cap = 1000, prefix_len = 1;
    VertexId root = 0;

    auto* count_euler = app.add_subcommand("count-euler", "Count Eulerian paths exactly");
    count_euler->add_option("--graph", graph_path, "graph file")->required();

    auto* enum_euler = app.add_subcommand("enum-euler", "Enumerate Eulerian paths");
    enum_euler->add_option("--graph", graph_path, "graph file")->required();
    enum_euler->add_option("--cap", cap, "fail past this many paths");

    auto* sample_euler = app.add_subcommand("sample-euler", "Draw uniform Eulerian paths");
    sample_euler->add_option("--graph", graph_path, "graph file")->required();
    sample_euler->add_option("--samples", samples, "number of draws");
    sample_euler->add_option("--seed", seed, "root seed");

    auto* sample_arb = app.add_subcommand("sample-arb", "Draw uniform spanning in-arborescences");
    sample_arb->add_option("--graph", graph_path, "graph file")->required();
    sample_arb->add_option("--root", root, "root vertex")->required();
    sample_arb->add_option("--samples", samples, "number of draws");
    sample_arb->add_option("--seed", seed, "root seed");

    auto* count_arb = app.add_subcommand("count-arb", "Count spanning in-arborescences");
    count_arb->add_option("--graph", graph_path, "graph file")->required();
    count_arb->add_option("--root", root, "root vertex")->required();

    auto* gibbs_prefix =
        app.add_subcommand("gibbs-prefix", "Sample a path prefix of the infinite-graph law");
    gibbs_prefix->add_option("--family", family_text, "graph family, e.g. ladder:2,1")->required();
    gibbs_prefix->add_option("--k", prefix_len, "prefix length");
    gibbs_prefix->add_option("--horizon", horizon, "walk truncation horizon");
    gibbs_prefix->add_option("--seed", seed, "root seed");

    auto* condition =
        app.add_subcommand("condition", "Sample sequences conditioned on transition counts");
    condition->add_option("--counts", counts_path, "transition-count file")->required();
    condition->add_option("--samples", samples, "number of draws");
    condition->add_option("--seed", seed, "root seed");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "one of: best, wilson, euler, pex, gibbs, transience")
        ->required();
    verify->add_option("--seed", seed, "root seed");

    auto* return_prob =
        app.add_subcommand("return-prob", "Estimate the walk's return probability");
    return_prob->add_option("--family", family_text, "graph family, e.g. ladder:2,1")->required();
    return_prob->add_option("--samples", samples, "number of walks");
    return_prob->add_option("--horizon", horizon, "walk truncation horizon");
    return_prob->add_option("--seed", seed, "root seed");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("eulerpath");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    CommandContext ctx;
    try {
        if (count_euler->parsed()) {
            ctx.command = "count-euler";
            ctx.inputs["graph"] = file_input(graph_path);
            const GraphInput input = read_graph_file(graph_path);
            const Digraph& g = input.require_finite();
            emit_manifest(out, ctx,
                          Json{{"count", decimal_string(count_eulerian_paths(g))},
                               {"classification", json_of_classification(classify_eulerian(g))}});
            return 0;
        }
        if (enum_euler->parsed()) {
            ctx.command = "enum-euler";
            ctx.inputs["graph"] = file_input(graph_path);
            ctx.inputs["cap"] = cap;
            const GraphInput input = read_graph_file(graph_path);
            const Digraph& g = input.require_finite();
            const std::vector<Path> paths = enumerate_eulerian_paths(g, cap);
            Json arr = Json::array();
            for (const Path& p : paths) arr.push_back(json_of_path(p));
            emit_manifest(out, ctx, Json{{"count", paths.size()}, {"paths", arr}});
            return 0;
        }
        if (sample_euler->parsed()) {
            ctx.command = "sample-euler";
            ctx.inputs["graph"] = file_input(graph_path);
            ctx.inputs["samples"] = samples;
            ctx.seed = seed;
            const GraphInput input = read_graph_file(graph_path);
            const Digraph& g = input.require_finite();
            std::vector<Path> paths(samples);
            parallel_ranges(samples, [&](unsigned, std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    RngStream rng = make_stream(seed, i);
                    paths[i] = sample_eulerian_finite(g, rng);
                }
            });
            Json arr = Json::array();
            for (const Path& p : paths) arr.push_back(json_of_path(p));
            emit_manifest(out, ctx, Json{{"paths", arr}});
            return 0;
        }
        if (sample_arb->parsed()) {
            ctx.command = "sample-arb";
            ctx.inputs["graph"] = file_input(graph_path);
            ctx.inputs["root"] = root;
            ctx.inputs["samples"] = samples;
            ctx.seed = seed;
            const GraphInput input = read_graph_file(graph_path);
            const Digraph& g = input.require_finite();
            g.index_of(root);
            std::vector<InArboretum> arbs(samples);
            parallel_ranges(samples, [&](unsigned, std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    RngStream rng = make_stream(seed, i);
                    arbs[i] = wilson_finite(g, root, {}, rng);
                }
            });
            Json arr = Json::array();
            for (const InArboretum& a : arbs) arr.push_back(json_of_arboretum(a));
            emit_manifest(out, ctx, Json{{"arborescences", arr}});
            return 0;
        }
        if (count_arb->parsed()) {
            ctx.command = "count-arb";
            ctx.inputs["graph"] = file_input(graph_path);
            ctx.inputs["root"] = root;
            const GraphInput input = read_graph_file(graph_path);
            const Digraph& g = input.require_finite();
            emit_manifest(out, ctx,
                          Json{{"count", decimal_string(count_in_arborescences(g, root))}});
            return 0;
        }
        if (gibbs_prefix->parsed()) {
            ctx.command = "gibbs-prefix";
            ctx.inputs["family"] = family_text;
            ctx.inputs["k"] = prefix_len;
            ctx.inputs["horizon"] = horizon;
            ctx.seed = seed;
            const auto [p, q] = parse_ladder_family(family_text);
            const LazyDigraph g = ladder_family(p, q);
            RngStream rng = make_stream(seed, 0);
            emit_manifest(
                out, ctx,
                json_of_gibbs(sample_gibbs_prefix(g, static_cast<std::size_t>(prefix_len),
                                                  horizon, rng)));
            return 0;
        }
        if (condition->parsed()) {
            ctx.command = "condition";
            ctx.inputs["counts"] = file_input(counts_path);
            ctx.inputs["samples"] = samples;
            ctx.seed = seed;
            const TransitionCounts tc = read_counts_file(counts_path);
            const CountsDigraph cd = digraph_from_counts(tc);
            std::vector<std::vector<State>> seqs(samples);
            parallel_ranges(samples, [&](unsigned, std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t i = b; i < e; ++i) {
                    RngStream rng = make_stream(seed, i);
                    seqs[i] = condition_on_counts(cd, rng);
                }
            });
            emit_manifest(out, ctx,
                          Json{{"end", cd.end}, {"sequences", seqs}, {"states", cd.states}});
            return 0;
        }
        if (verify->parsed()) {
            ctx.command = "verify";
            ctx.inputs["suite"] = suite;
            ctx.seed = seed;
            const std::vector<CheckResult> checks = run_verify_suite(suite, seed);
            bool all_pass = true;
            Json arr = Json::array();
            for (const CheckResult& c : checks) {
                all_pass = all_pass && c.pass;
                arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
            }
            emit_manifest(out, ctx, Json{{"suite", suite}, {"checks", arr}, {"passed", all_pass}});
            if (!all_pass) {
                err << "verification failed: suite " << suite << '\n';
                return 2;
            }
            return 0;
        }
        if (return_prob->parsed()) {
            ctx.command = "return-prob";
            ctx.inputs["family"] = family_text;
            ctx.inputs["samples"] = samples;
            ctx.inputs["horizon"] = horizon;
            ctx.seed = seed;
            const auto [p, q] = parse_ladder_family(family_text);
            const LazyDigraph g = ladder_family(p, q);
            emit_manifest(out, ctx,
                          json_of_return(estimate_return_probability(g, 0, samples, horizon, seed)));
            return 0;
        }
        err << "error: no subcommand selected\n";
        return 1;
    } catch (const ParseError& e) {
        emit_manifest(out, ctx,
                      Json{{"error", "parse"},
                           {"line", e.line},
                           {"column", e.column},
                           {"message", e.what()}});
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NotEulerianInput& e) {
        Json payload{{"error", "not-eulerian"}, {"message", e.what()}};
        if (e.witness) payload["witness"] = json_of_witness(*e.witness);
        emit_manifest(out, ctx, payload);
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const CapExceeded& e) {
        emit_manifest(out, ctx, Json{{"error", "cap-exceeded"}, {"cap", e.cap}, {"message", e.what()}});
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        emit_manifest(out, ctx, Json{{"error", "invalid-input"}, {"message", e.what()}});
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        emit_manifest(out, ctx, Json{{"error", "internal"}, {"message", e.what()}});
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace eulerpath
