#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "squco/construct.hpp"
#include "squco/reduction.hpp"

using namespace squco;

TEST(Reduction, InstanceShape) {
    const auto inst = build_reduction_instance(cycle_graph(4), cycle_graph(4));
    EXPECT_EQ(inst.n_prime, 6u);
    EXPECT_EQ(inst.m_prime, 4u + 9);
    EXPECT_EQ(inst.h.h.part_a().size(), 2 * inst.n_prime + 2);
    EXPECT_EQ(inst.h.h.part_b().size(), 2 * inst.m_prime + 2);
    EXPECT_EQ(audit_reduction_instance(inst), "");
}

TEST(Reduction, AuditCatchesTampering) {
    auto inst = build_reduction_instance(path_graph(3), path_graph(3));
    inst.n_prime += 1;
    EXPECT_NE(audit_reduction_instance(inst), "");
}

TEST(Reduction, DecidesSmallPairs) {
    EXPECT_TRUE(decide_iso_via_squco(complete_graph(3), complete_graph(3)));
    EXPECT_FALSE(decide_iso_via_squco(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
    EXPECT_TRUE(decide_iso_via_squco(empty_graph(5), empty_graph(5)));
    EXPECT_FALSE(decide_iso_via_squco(path_graph(4), cycle_graph(4)));
    EXPECT_FALSE(decide_iso_via_squco(path_graph(4), path_graph(5)));
    EXPECT_TRUE(decide_iso_via_squco(Graph(1), Graph(1)));
}

TEST(Reduction, CountMismatchIsRejectedByBuilder) {
    EXPECT_THROW(build_reduction_instance(path_graph(4), cycle_graph(4)), ReductionError);
    EXPECT_THROW(build_reduction_instance(Graph(3), Graph(4)), ReductionError);
    EXPECT_THROW(build_reduction_instance(Graph(1), Graph(1)), ReductionError);
}

TEST(Reduction, AgreesWithDirectEngine) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const Graph g = oracle::random_graph(n, 0.5, rng);
        Graph h = trial % 2 ? oracle::relabel_randomly(g, rng) : oracle::random_graph(n, 0.5, rng);
        if (h.size() != g.size()) continue;
        EXPECT_EQ(decide_iso_via_squco(g, h), are_isomorphic(g, h).isomorphic) << to_graph6(g) << " " << to_graph6(h);
    }
}
