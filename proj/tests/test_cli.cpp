#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "squco/cli.hpp"

using namespace squco;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run_command(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / ("squco_cli_" + name);
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST(Cli, CheckFranklinJson) {
    const auto r = run({"check", "--construct", "franklin", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["schema"], "squco-report-v1");
    EXPECT_EQ(doc["squco"], true);
    EXPECT_EQ(doc["metrics"]["girth"], 4);
    EXPECT_EQ(doc["metrics"]["diameter"], 3);
    EXPECT_EQ(doc["metrics"]["planar"], false);
    EXPECT_EQ(doc["n"], 12);
    EXPECT_EQ(doc["m"], 18);
    EXPECT_EQ(doc["filters"]["girth_admissible"], "pass");
    EXPECT_EQ(doc["witness"].size(), 12u);
}

TEST(Cli, CheckReadsStdinAndReportsInfiniteGirth) {
    const auto r = run({"check", "--json"}, "@\nCR\n");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"girth\": \"inf\""), std::string::npos);
    EXPECT_NE(r.out.find("\"squco\": true"), std::string::npos);
    EXPECT_NE(r.out.find("\"squco\": false"), std::string::npos);
}

TEST(Cli, CheckHumanOutput) {
    const auto r = run({"check", "--g6", to_graph6(cycle_graph(7))});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("squco      yes"), std::string::npos);
    EXPECT_NE(r.out.find("girth      7"), std::string::npos);
}

TEST(Cli, ConstructMatchesLibrary) {
    EXPECT_EQ(run({"construct", "cycle", "7"}).out, to_graph6(cycle_graph(7)) + "\n");
    EXPECT_EQ(run({"construct", "circulant", "41", "4", "5", "8", "10"}).out,
              to_graph6(circulant(41, {4, 5, 8, 10})) + "\n");
    EXPECT_EQ(run({"construct", "blowup", to_graph6(cycle_graph(7)), "2", "1", "1", "2", "1", "2", "2"}).out,
              to_graph6(c7_blowup({2, 1, 1, 2, 1, 2, 2})) + "\n");
    EXPECT_EQ(run({"construct", "franklin"}).out, to_graph6(franklin()) + "\n");
    EXPECT_EQ(run({"construct", "joink2", "B?"}).out, to_graph6(join_k2(Graph(3))) + "\n");
    EXPECT_EQ(run({"construct", "incidence", "Bw"}).out, to_graph6(incidence_graph(complete_graph(3)).graph()) + "\n");
    const auto p3 = to_graph6(path_graph(3));
    EXPECT_EQ(run({"construct", "ext", p3}).out, to_graph6(ext(*bipartition(path_graph(3))).graph()) + "\n");
    const auto h = run({"construct", "hcons", "CK", "CK"});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_TRUE(are_isomorphic(from_graph6(h.out), franklin()).isomorphic);
    const auto sup = run({"construct", "squco-super", p3, "--json"});
    ASSERT_EQ(sup.code, 0) << sup.err;
    const auto doc = json::parse(sup.out);
    EXPECT_EQ(doc["embedding"].size(), 3u);
    EXPECT_EQ(doc["n"], 2 * 7 + 4);
}

TEST(Cli, ConstructErrors) {
    EXPECT_EQ(run({"construct", "cycle"}).code, 2);
    EXPECT_EQ(run({"construct", "cycle", "x"}).code, 2);
    EXPECT_EQ(run({"construct", "nonsense"}).code, 2);
    EXPECT_EQ(run({"construct", "ext", "Bw"}).code, 2);  // triangle is not bipartite
    EXPECT_EQ(run({"construct", "circulant", "10", "7"}).code, 2);
}

TEST(Cli, UsageErrors) {
    const auto r = run({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("check"), std::string::npos);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"check", "--bogus"}).code, 2);
    EXPECT_EQ(run({"check", "--g6", "D h"}).code, 2);
    EXPECT_EQ(run({"search"}).code, 2);
    EXPECT_EQ(run({"search", "--n-max", "4", "--predicate", "nope"}).code, 2);
    EXPECT_EQ(run({"search", "--n-max", "4", "--girth-min", "2"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SearchJsonIsDeterministic) {
    const auto a = run({"search", "--n-max", "10", "--json", "--jobs", "1"});
    ASSERT_EQ(a.code, 0) << a.err;
    const auto doc = json::parse(a.out);
    EXPECT_EQ(doc["hits"].size(), 6u);
    for (const auto& h : doc["hits"]) EXPECT_EQ(h["squco"], true);
    const auto b = run({"search", "--n-max", "10", "--json", "--jobs", "3"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SearchHumanOutput) {
    const auto r = run({"search", "--n-max", "8", "--bipartite", "--planar", "--jobs", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("hits for 1 <= n <= 8 (constraints: bipartite,planar): 1"), std::string::npos);
    EXPECT_NE(r.err.find("elapsed"), std::string::npos);
}

TEST(Cli, Reduce) {
    std::mt19937_64 rng(51);
    const Graph g = oracle::random_graph(6, 0.5, rng);
    const auto a = write_temp("a.g6", to_graph6(g) + "\n");
    const auto b = write_temp("b.g6", to_graph6(oracle::relabel_randomly(g, rng)) + "\n");
    const auto r = run({"reduce", "--g1", a, "--g2", b});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "isomorphic\n");

    const auto c6 = write_temp("c6.g6", to_graph6(cycle_graph(6)));
    const auto tt = write_temp("2k3.g6", to_graph6(disjoint_union(cycle_graph(3), cycle_graph(3))));
    const auto n = run({"reduce", "--g1", c6, "--g2", tt, "--json", "--emit-instance"});
    EXPECT_EQ(n.code, 3);
    const auto doc = json::parse(n.out);
    EXPECT_EQ(doc["isomorphic"], false);
    EXPECT_EQ(doc["n_prime"], 8);
    EXPECT_TRUE(doc["instance"].is_string());

    EXPECT_EQ(run({"reduce", "--g1", a, "--g2", "/nonexistent/file"}).code, 2);
}

TEST(Cli, Filter) {
    const std::string input = to_graph6(cycle_graph(7)) + "\n" + to_graph6(cycle_graph(6)) + "\n" + "xx!\n" + "@\n";
    const auto r = run({"filter"}, input);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, to_graph6(cycle_graph(7)) + "\n@\n");
    EXPECT_NE(r.err.find("line 3"), std::string::npos);
    EXPECT_EQ(run({"filter", "--strict"}, input).code, 2);
    EXPECT_EQ(run({"filter", "--predicate", "bipartite"}, input).out, to_graph6(cycle_graph(6)) + "\n@\n");
    const auto empty = run({"filter"}, "");
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(empty.out, "");
}

TEST(Cli, JobsResolution) {
    EXPECT_EQ(cli::resolve_jobs(5, "3"), 5u);
    EXPECT_EQ(cli::resolve_jobs(std::nullopt, "3"), 3u);
    EXPECT_GE(cli::resolve_jobs(std::nullopt, nullptr), 1u);
    EXPECT_GE(cli::resolve_jobs(std::nullopt, ""), 1u);
    EXPECT_THROW(cli::resolve_jobs(std::nullopt, "many"), cli::UsageError);
    EXPECT_THROW(cli::resolve_jobs(0, nullptr), cli::UsageError);
}
