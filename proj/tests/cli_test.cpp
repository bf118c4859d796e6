#include "eulerpath/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulerpath/serialize.hpp"

namespace eulerpath {
namespace {

namespace fs = std::filesystem;

struct RunOutcome {
    int code;
    std::string out;
    std::string err;
    Json manifest;  // parsed stdout (null when stdout is not JSON, e.g. help)
};

RunOutcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    RunOutcome r{code, out.str(), err.str(), Json()};
    if (!r.out.empty() && r.out.front() == '{') r.manifest = Json::parse(r.out);
    return r;
}

// Writes content to a fresh file under the temp directory.
fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream(path.string()) << content;
    return path;
}

const std::string kDoubledPair =
    "eulergraph 1\n"
    "source 0\n"
    "edge 0 0 1\n"
    "edge 1 0 1\n"
    "edge 2 1 0\n"
    "edge 3 1 0\n";

const std::string kLoopPairCounts =
    "start 0\n"
    "count 0 0 1\n"
    "count 0 1 1\n"
    "count 1 0 1\n";

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        graph_ = write_temp("eulerpath-cli-graph.txt", kDoubledPair).string();
        counts_ = write_temp("eulerpath-cli-counts.txt", kLoopPairCounts).string();
    }
    void TearDown() override {
        fs::remove(graph_);
        fs::remove(counts_);
    }
    std::string graph_;
    std::string counts_;
};

TEST_F(CliTest, CountEuler) {
    const RunOutcome r = run({"count-euler", "--graph", graph_});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.manifest["command"], "count-euler");
    EXPECT_EQ(r.manifest["outputs"]["count"], "4");
    EXPECT_EQ(r.manifest["outputs"]["classification"]["kind"], "circuit");
    EXPECT_TRUE(r.manifest["seed"].is_null());  // no randomness consumed
    EXPECT_EQ(r.manifest["inputs"]["graph"]["path"], graph_);
    EXPECT_EQ(r.manifest["inputs"]["graph"]["digest"].get<std::string>().size(), 16u);
}

TEST_F(CliTest, EnumEulerListsAndCaps) {
    const RunOutcome ok = run({"enum-euler", "--graph", graph_});
    ASSERT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(ok.manifest["outputs"]["count"], 4);
    EXPECT_EQ(ok.manifest["outputs"]["paths"].size(), 4u);
    for (const Json& p : ok.manifest["outputs"]["paths"]) {
        EXPECT_EQ(p.size(), 9u);  // 5 vertices interleaved with 4 edges
    }

    const RunOutcome capped = run({"enum-euler", "--graph", graph_, "--cap", "3"});
    EXPECT_EQ(capped.code, 1);
    EXPECT_EQ(capped.manifest["outputs"]["error"], "cap-exceeded");
    EXPECT_EQ(capped.manifest["outputs"]["cap"], 3);
}

TEST_F(CliTest, SampleEulerIsByteIdenticalAcrossRunsAndThreadCounts) {
    const std::vector<std::string> args{"sample-euler", "--graph", graph_, "--samples", "6",
                                        "--seed", "5"};
    const RunOutcome a = run(args);
    const RunOutcome b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);

    ASSERT_EQ(setenv("EULER_THREADS", "3", 1), 0);
    const RunOutcome threaded = run(args);
    unsetenv("EULER_THREADS");
    EXPECT_EQ(a.out, threaded.out);

    EXPECT_EQ(a.manifest["outputs"]["paths"].size(), 6u);
    EXPECT_EQ(a.manifest["seed"], 5);

    const RunOutcome reseeded = run({"sample-euler", "--graph", graph_, "--samples", "6",
                                     "--seed", "6"});
    EXPECT_NE(a.out, reseeded.out);
}

TEST_F(CliTest, SampleArbDrawsAndRejectsUnknownRoot) {
    const RunOutcome ok =
        run({"sample-arb", "--graph", graph_, "--root", "1", "--samples", "2", "--seed", "3"});
    ASSERT_EQ(ok.code, 0) << ok.err;
    ASSERT_EQ(ok.manifest["outputs"]["arborescences"].size(), 2u);
    const Json& first = ok.manifest["outputs"]["arborescences"][0];
    EXPECT_EQ(first["cover"].size(), 2u);
    EXPECT_EQ(first["edges"].size(), 1u);  // only vertex 0 carries an edge

    const RunOutcome bad = run({"sample-arb", "--graph", graph_, "--root", "7"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.manifest["outputs"]["error"], "invalid-input");
}

TEST_F(CliTest, CountArb) {
    const RunOutcome r = run({"count-arb", "--graph", graph_, "--root", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.manifest["outputs"]["count"], "2");
}

TEST_F(CliTest, GibbsPrefixEmitsAnAlternatingPath) {
    const RunOutcome r = run({"gibbs-prefix", "--family", "ladder:2,1", "--k", "4", "--seed", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json& outputs = r.manifest["outputs"];
    EXPECT_EQ(outputs["path"].size(), 9u);
    EXPECT_EQ(outputs["path"][0], 0);
    EXPECT_EQ(outputs["horizon"], 10000);
    EXPECT_GE(outputs["covered_edge_count"].get<std::uint64_t>(), 1u);
    EXPECT_TRUE(outputs["truncated"].is_boolean());

    const RunOutcome again =
        run({"gibbs-prefix", "--family", "ladder:2,1", "--k", "4", "--seed", "2"});
    EXPECT_EQ(r.out, again.out);
}

TEST_F(CliTest, ConditionSamplesTheRightClass) {
    const RunOutcome r = run({"condition", "--counts", counts_, "--samples", "4", "--seed", "9"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.manifest["outputs"]["end"], "0");
    ASSERT_EQ(r.manifest["outputs"]["sequences"].size(), 4u);
    for (const Json& seq : r.manifest["outputs"]["sequences"]) {
        EXPECT_EQ(seq.size(), 4u);
        EXPECT_EQ(seq[0], "0");
        EXPECT_EQ(seq[3], "0");
    }
}

TEST_F(CliTest, ReturnProbOnTheForwardOnlyFamilyIsZero) {
    const RunOutcome r = run({"return-prob", "--family", "ladder:1,0", "--samples", "50",
                              "--horizon", "20", "--seed", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.manifest["outputs"]["point_estimate"], 0.0);
    EXPECT_EQ(r.manifest["outputs"]["returned"], 0);
    EXPECT_EQ(r.manifest["outputs"]["horizon_hits"], 50);
}

TEST_F(CliTest, VerifyRejectsAnUnknownSuite) {
    const RunOutcome r = run({"verify", "--suite", "bogus"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.manifest["outputs"]["error"], "invalid-input");
}

TEST_F(CliTest, ParseErrorsCarryPosition) {
    const fs::path bad = write_temp("eulerpath-cli-bad-graph.txt", "eulergraph 1\nedge x 0 1\n");
    const RunOutcome r = run({"count-euler", "--graph", bad.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.manifest["outputs"]["error"], "parse");
    EXPECT_EQ(r.manifest["outputs"]["line"], 2);
    EXPECT_EQ(r.manifest["outputs"]["column"], 6);
    fs::remove(bad);
}

TEST_F(CliTest, NotEulerianInputsReportAWitness) {
    const fs::path open =
        write_temp("eulerpath-cli-open-graph.txt", "eulergraph 1\nsource 0\nedge 0 0 1\n");
    const RunOutcome r = run({"count-euler", "--graph", open.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.manifest["outputs"]["error"], "not-eulerian");
    EXPECT_TRUE(r.manifest["outputs"].contains("witness"));
    fs::remove(open);
}

TEST(CliBasics, HelpSucceedsAndMissingArgumentsFail) {
    std::ostringstream out, err;
    EXPECT_EQ(run_cli({"--help"}, out, err), 0);
    EXPECT_NE(out.str().find("count-euler"), std::string::npos);

    std::ostringstream out2, err2;
    EXPECT_EQ(run_cli({"count-euler"}, out2, err2), 1);  // --graph is required
    std::ostringstream out3, err3;
    EXPECT_EQ(run_cli({}, out3, err3), 1);  // a subcommand is required
}

}  // namespace
}  // namespace eulerpath
