#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "squco/construct.hpp"
#include "squco/graph.hpp"
#include "squco/graph6.hpp"
#include "squco/metrics.hpp"

using namespace squco;

TEST(Graph, EdgesAreSortedAndSymmetric) {
    Graph g = Graph::from_edges(4, {{2, 1}, {0, 3}, {1, 0}});
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}}));
    EXPECT_TRUE(g.adjacent(1, 2));
    EXPECT_TRUE(g.adjacent(2, 1));
    EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{2, 2, 1, 1}));
    g.remove_edge(1, 0);
    EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
}

TEST(Graph, WideGraphsUseSeveralWords) {
    Graph g = path_graph(130);
    EXPECT_EQ(g.stride(), 3u);
    EXPECT_EQ(g.size(), 129u);
    EXPECT_TRUE(g.adjacent(63, 64));
    EXPECT_TRUE(g.adjacent(128, 129));
    EXPECT_EQ(distance_profile(g).diameter, 129u);
}

TEST(Graph, FromWordsValidates) {
    const std::vector<std::uint64_t> ok{0b10, 0b01};
    EXPECT_EQ(Graph::from_words(2, ok), complete_graph(2));
    const std::vector<std::uint64_t> asym{0b10, 0b00};
    EXPECT_THROW(Graph::from_words(2, asym), std::invalid_argument);
    const std::vector<std::uint64_t> loop{0b01, 0b00};
    EXPECT_THROW(Graph::from_words(2, loop), std::invalid_argument);
}

TEST(Length, InfinityOrdersLast) {
    EXPECT_LT(Length(3), Length::infinite());
    EXPECT_EQ(Length::infinite().str(), "inf");
    EXPECT_EQ(Length(4).str(), "4");
    EXPECT_FALSE(Length::infinite().is_finite());
    EXPECT_TRUE(Length(7) == 7u);
}

TEST(Operators, ComplementAndSquareAgreeWithDistances) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 12, 0.3, rng);
        const Graph c = complement(g), s = square(g);
        for (Vertex u = 0; u < g.order(); ++u) {
            const auto d = distances_from(g, u);
            for (Vertex v = 0; v < g.order(); ++v) {
                if (u == v) continue;
                EXPECT_EQ(c.adjacent(u, v), !g.adjacent(u, v));
                EXPECT_EQ(s.adjacent(u, v), d[v].is_finite() && d[v].value() <= 2);
            }
        }
    }
}

TEST(Operators, SquareOfPath) {
    EXPECT_EQ(square(path_graph(4)).edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST(Bipartite, EvenCycleSplitsOddCycleReportsWitness) {
    auto bg = bipartition(cycle_graph(6));
    ASSERT_TRUE(bg);
    EXPECT_EQ(bg->part_a(), (std::vector<Vertex>{0, 2, 4}));
    EXPECT_FALSE(bipartition(cycle_graph(5)));

    const Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}, {5, 6}});
    auto cyc = odd_cycle(g);
    ASSERT_TRUE(cyc);
    EXPECT_EQ(cyc->size() % 2, 1u);
    for (std::size_t i = 0; i < cyc->size(); ++i) EXPECT_TRUE(g.adjacent((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
}

TEST(Bipartite, ConstructorRejectsEdgeInsidePart) {
    EXPECT_THROW(BipartiteGraph(complete_graph(2), {false, false}), std::invalid_argument);
    EXPECT_THROW(BipartiteGraph(complete_graph(2), {false}), std::invalid_argument);
}

TEST(Bipartite, ComplementSwapsCrossPairs) {
    const auto k23 = complete_bipartite(2, 3);
    const auto c = bipartite_complement(k23);
    EXPECT_EQ(c.graph().size(), 0u);
    EXPECT_EQ(c.sides(), k23.sides());
    const auto back = bipartite_complement(c);
    EXPECT_EQ(back, k23);
}

TEST(Induced, KeepsOrderOfSelection) {
    const Graph g = cycle_graph(5);
    const Graph h = induced_subgraph(g, {4, 0, 1});
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
    EXPECT_THROW(induced_subgraph(g, {0, 9}), std::out_of_range);
}

TEST(Graph6, MatchesReferenceEncodings) {
    // references produced with networkx.to_graph6_bytes
    EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
    EXPECT_EQ(to_graph6(Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})), "DQc");
    const std::string p64 = to_graph6(path_graph(64));
    EXPECT_EQ(p64.substr(0, 4), "~?@?");
    EXPECT_EQ(from_graph6(p64), path_graph(64));
    const Graph petersen = from_graph6("IheA@GUAo");
    EXPECT_EQ(petersen.order(), 10u);
    EXPECT_EQ(petersen.size(), 15u);
    EXPECT_EQ(girth(petersen), 5u);
}

TEST(Graph6, TinyGraphs) {
    EXPECT_EQ(to_graph6(Graph(0)), "?");
    EXPECT_EQ(to_graph6(Graph(1)), "@");
    EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
    EXPECT_EQ(from_graph6("?").order(), 0u);
}

TEST(Graph6, RoundTripsRandomGraphs) {
    std::mt19937_64 rng(5);
    for (std::size_t n : {0u, 1u, 2u, 7u, 62u, 63u, 64u, 65u, 100u, 200u}) {
        const Graph g = oracle::random_graph(n, 0.4, rng);
        EXPECT_EQ(from_graph6(to_graph6(g)), g) << n;
    }
}

TEST(Graph6, ToleratesHeaderAndLineEnding) {
    EXPECT_EQ(from_graph6(">>graph6<<Dhc\n"), cycle_graph(5));
    EXPECT_EQ(from_graph6("Dhc\r\n"), cycle_graph(5));
}

TEST(Graph6, ErrorsCarryByteOffsets) {
    auto offset_of = [](std::string_view s) -> long {
        try {
            from_graph6(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    EXPECT_EQ(offset_of(""), 0);
    EXPECT_EQ(offset_of("Dh"), 2);     // truncated payload
    EXPECT_EQ(offset_of("Dhcc"), 3);   // trailing byte
    EXPECT_EQ(offset_of("A`"), 1);     // padding bit set
    EXPECT_EQ(offset_of("D h"), 1);    // byte outside 63..126
    EXPECT_EQ(offset_of(":Fa@x^"), 0); // sparse6
    EXPECT_EQ(offset_of("&C~"), 0);    // digraph6
    EXPECT_GE(offset_of("~??D"), 0);   // non-minimal extended header
}

TEST(Metrics, GirthMatchesNaiveOracle) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 11, 0.15 + 0.05 * (trial % 6), rng);
        const auto want = oracle::naive_girth(g);
        const Length got = girth(g);
        if (want) {
            EXPECT_EQ(got, *want);
        } else {
            EXPECT_FALSE(got.is_finite());
        }
    }
}

TEST(Metrics, ArticulationMatchesVertexDeletion) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 12, 0.2, rng);
        auto got = articulation_points(g);
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, oracle::naive_cut_vertices(g));
    }
}

TEST(Metrics, ProfileOfDisconnectedGraphIsInfinite) {
    const auto p = distance_profile(disjoint_union(cycle_graph(3), cycle_graph(3)));
    EXPECT_FALSE(p.connected);
    EXPECT_FALSE(p.radius.is_finite());
    EXPECT_FALSE(p.diameter.is_finite());

    const auto q = distance_profile(path_graph(5));
    EXPECT_TRUE(q.connected);
    EXPECT_EQ(q.radius, 2u);
    EXPECT_EQ(q.diameter, 4u);
    EXPECT_EQ(q.eccentricities[0], 4u);
}

TEST(Metrics, SingleVertex) {
    const auto p = distance_profile(Graph(1));
    EXPECT_TRUE(p.connected);
    EXPECT_EQ(p.radius, 0u);
    EXPECT_EQ(p.diameter, 0u);
    EXPECT_FALSE(girth(Graph(1)).is_finite());
}

TEST(Metrics, DistanceShells) {
    const Graph g = path_graph(6);
    EXPECT_EQ(distance_shell(g, 0, 2, Shell::exact), (std::vector<Vertex>{2}));
    EXPECT_EQ(distance_shell(g, 0, 4, Shell::at_least), (std::vector<Vertex>{4, 5}));
    EXPECT_EQ(distance_shell(g, 2, 0, Shell::exact), (std::vector<Vertex>{2}));
    EXPECT_THROW(distance_shell(g, 6, 1, Shell::exact), std::out_of_range);
    const Graph split = disjoint_union(path_graph(2), path_graph(1));
    EXPECT_EQ(distance_shell(split, 0, 5, Shell::at_least), (std::vector<Vertex>{2}));
}
