#include <gtest/gtest.h>

#include "cluster/fixtures.hpp"
#include "cluster/loops.hpp"

using cluster::Closure;
using cluster::ExchangeMatrix;
using cluster::find_fixture;
using cluster::LoopReport;
using cluster::Rank2Class;
using cluster::verify_loop;

TEST(Loops, RegistryFixturesClassifyAsRecorded) {
    for (const auto& fx : cluster::registry()) {
        LoopReport rep = verify_loop(fx.B, fx.loop);
        EXPECT_EQ(rep.closed, fx.expected) << fx.name;
        EXPECT_EQ(rep.length, static_cast<int>(fx.loop.size())) << fx.name;
        EXPECT_EQ(rep.trace.size(), fx.loop.size()) << fx.name;
        if (fx.expected == Closure::up_to_permutation)
            EXPECT_EQ(rep.perm, fx.expected_perm) << fx.name;
    }
}

TEST(Loops, DoublingPermutationLoopsMakesThemStrict) {
    for (const char* name : {"a3a3", "a2a2", "a2"}) {
        const auto* fx = find_fixture(name);
        std::vector<int> twice = fx->loop;
        twice.insert(twice.end(), fx->loop.begin(), fx->loop.end());
        LoopReport rep = verify_loop(fx->B, twice);
        EXPECT_EQ(rep.closed, Closure::strict) << name;
    }
}

TEST(Loops, TruncatedSequencesAreOpen) {
    const auto* d4 = find_fixture("d4");
    EXPECT_EQ(verify_loop(d4->B, {1, 2, 3}).closed, Closure::open);
    std::vector<int> almost(d4->loop.begin(), d4->loop.end() - 1);
    EXPECT_EQ(verify_loop(d4->B, almost).closed, Closure::open);

    const auto* a33 = find_fixture("a3a3");
    std::vector<int> cut(a33->loop.begin(), a33->loop.end() - 1);
    EXPECT_EQ(verify_loop(a33->B, cut).closed, Closure::open);
}

TEST(Loops, EmptySequenceIsStrict) {
    EXPECT_EQ(verify_loop(find_fixture("d4")->B, {}).closed, Closure::strict);
}

TEST(Loops, AntipodalPermutationIsAnInvolution) {
    const auto* fx = find_fixture("a3a3");
    LoopReport rep = verify_loop(fx->B, fx->loop);
    ASSERT_EQ(rep.closed, Closure::up_to_permutation);
    // (1 9)(2 8)(3 7)(4 6) in 1-based terms, fixing the center
    EXPECT_EQ(rep.perm, (std::vector<int>{8, 7, 6, 5, 4, 3, 2, 1, 0}));
    for (int i = 0; i < 9; ++i) EXPECT_EQ(rep.perm[rep.perm[i]], i);
}

TEST(Loops, Rank2LoopLengthsMatchClassOnFixtures) {
    auto expected_length = [](Rank2Class c) {
        switch (c) {
            case Rank2Class::A1xA1: return 4;
            case Rank2Class::A2: return 5;
            case Rank2Class::B2: return 6;
            case Rank2Class::G2: return 8;
            default: return 0;
        }
    };
    for (const char* name : {"d4", "genus1", "a3a3", "a2a2", "a2", "b2", "g2", "a1a1"}) {
        const auto* fx = find_fixture(name);
        for (const auto& r : cluster::rank2_loops(fx->B)) {
            ASSERT_NE(r.cls, Rank2Class::Infinite) << name;
            EXPECT_TRUE(r.closed) << name << " pair " << r.i << "," << r.j;
            EXPECT_EQ(r.length, expected_length(r.cls))
                << name << " pair " << r.i << "," << r.j;
        }
    }
}

TEST(Loops, Rank2LoopsOnExplicitMatrices) {
    // D4: the source pair commutes, a source-sink pair is a 5-loop
    auto d4 = cluster::rank2_loops(find_fixture("d4")->B);
    ASSERT_EQ(d4.size(), 6u);  // all unordered pairs of 4 indices
    for (const auto& r : d4) {
        if (r.j == 3) {
            EXPECT_EQ(r.cls, Rank2Class::A2);
            EXPECT_EQ(r.length, 5);
        } else {
            EXPECT_EQ(r.cls, Rank2Class::A1xA1);
            EXPECT_EQ(r.length, 4);
        }
    }
    // both orientations of the doubled and tripled arrows
    for (auto m : {ExchangeMatrix({{0, 1}, {-2, 0}}), ExchangeMatrix({{0, -2}, {1, 0}})}) {
        auto r = cluster::rank2_loops(m);
        ASSERT_EQ(r.size(), 1u);
        EXPECT_EQ(r[0].length, 6);
    }
    for (auto m : {ExchangeMatrix({{0, 1}, {-3, 0}}), ExchangeMatrix({{0, -1}, {3, 0}})}) {
        auto r = cluster::rank2_loops(m);
        ASSERT_EQ(r.size(), 1u);
        EXPECT_EQ(r[0].length, 8);
    }
}

TEST(Loops, Rank2BoundStopsInfiniteTypes) {
    auto r = cluster::rank2_loops(ExchangeMatrix({{0, 2}, {-2, 0}}));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].cls, Rank2Class::Infinite);
    EXPECT_FALSE(r[0].closed);
}

TEST(Loops, ReportCarriesTrace) {
    const auto* fx = find_fixture("d4");
    LoopReport rep = verify_loop(fx->B, fx->loop);
    ASSERT_EQ(rep.trace.size(), 16u);
    // tropical signs: four ascents, then twelve descents
    for (int t = 0; t < 16; ++t) EXPECT_EQ(rep.trace[t].eps, t < 4 ? 1 : -1);
}
