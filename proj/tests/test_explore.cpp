#include <gtest/gtest.h>

#include "cluster/explore.hpp"
#include "cluster/fixtures.hpp"

using cluster::explore;
using cluster::ExchangeMatrix;
using cluster::GraphSlice;
using cluster::KeyMode;
using cluster::ResourceLimitError;
using cluster::sample_point;

TEST(Explore, PentagonCycleUnlabeled) {
    const auto* fx = cluster::find_fixture("a2");
    GraphSlice g = explore(fx->B, sample_point(2, 1), 10, 1000000, KeyMode::unlabeled);
    EXPECT_EQ(g.digests.size(), 5u);
    EXPECT_EQ(g.edges.size(), 5u);
    EXPECT_FALSE(g.truncated);
    // 5-cycle: every vertex has degree 2
    std::vector<int> deg(5, 0);
    for (const auto& e : g.edges) {
        ++deg[e[0]];
        ++deg[e[1]];
    }
    for (int d : deg) EXPECT_EQ(d, 2);
}

TEST(Explore, PentagonCycleLabeled) {
    const auto* fx = cluster::find_fixture("a2");
    GraphSlice g = explore(fx->B, sample_point(2, 1), 10, 1000000, KeyMode::labeled);
    EXPECT_EQ(g.digests.size(), 10u);
    EXPECT_EQ(g.edges.size(), 10u);
    EXPECT_FALSE(g.truncated);
}

TEST(Explore, DisjointPairFourCycle) {
    const auto* fx = cluster::find_fixture("a1a1");
    GraphSlice g = explore(fx->B, sample_point(2, 5), 10);
    EXPECT_EQ(g.digests.size(), 4u);
    EXPECT_EQ(g.edges.size(), 4u);
    EXPECT_FALSE(g.truncated);
}

TEST(Explore, DepthBoundSetsTruncated) {
    const auto* fx = cluster::find_fixture("genus1");
    GraphSlice g = explore(fx->B, sample_point(6, 2), 3);
    EXPECT_TRUE(g.truncated);
    EXPECT_GT(g.digests.size(), 6u);
    for (int d : g.depths) EXPECT_LE(d, 3);
}

TEST(Explore, VertexBudgetThrows) {
    const auto* fx = cluster::find_fixture("a2");
    EXPECT_THROW(explore(fx->B, sample_point(2, 1), 10, 3), ResourceLimitError);
}

TEST(Explore, DeterministicOutput) {
    const auto* fx = cluster::find_fixture("genus1");
    GraphSlice a = explore(fx->B, sample_point(6, 4), 2);
    GraphSlice b = explore(fx->B, sample_point(6, 4), 2);
    EXPECT_EQ(a.digests, b.digests);
    EXPECT_EQ(a.edges, b.edges);
    EXPECT_EQ(a.depths, b.depths);
    // vertex listing is sorted by digest
    EXPECT_TRUE(std::is_sorted(a.digests.begin(), a.digests.end()));
}

TEST(Explore, DotRendering) {
    const auto* fx = cluster::find_fixture("a2");
    GraphSlice g = explore(fx->B, sample_point(2, 1), 10);
    std::string dot = cluster::export_dot(g);
    EXPECT_NE(dot.find("graph exchange {"), std::string::npos);
    std::size_t nodes = 0, links = 0, pos = 0;
    while ((pos = dot.find("[label=\"", pos)) != std::string::npos) {
        ++nodes;
        pos += 8;
    }
    pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++links;
        pos += 4;
    }
    EXPECT_EQ(nodes, 10u);  // 5 vertex labels + 5 edge labels
    EXPECT_EQ(links, 5u);
    EXPECT_EQ(dot, cluster::export_dot(g));
}

TEST(Explore, MatrixIsValidatedFirst) {
    EXPECT_THROW(explore(ExchangeMatrix({{0, 1}, {1, 0}}), sample_point(2, 1), 2),
                 cluster::NotSkewSymmetrizable);
}
