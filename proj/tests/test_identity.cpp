#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "cluster/fixtures.hpp"
#include "cluster/identity.hpp"
#include "cluster/json_io.hpp"
#include "cluster/rewrite.hpp"
#include "cluster/series.hpp"

namespace {

using cluster::DilogWord;
using cluster::Fixture;
using cluster::IdentityFile;
using cluster::Int;
using cluster::IntMat;
using cluster::Rank2Class;
using cluster::SeedState;
using cluster::StepTrace;

std::vector<StepTrace> fixture_trace(const Fixture& fx, std::uint64_t seed = 20260822) {
    SeedState s = cluster::make_seed(fx.B, cluster::sample_point(fx.B.n, seed));
    return cluster::apply_sequence(s, fx.loop);
}

TEST(IdentityFromLoopTest, StarQuiverMatchesShippedPair) {
    const Fixture* fx = cluster::find_fixture("d4");
    ASSERT_NE(fx, nullptr);
    std::vector<StepTrace> trace = fixture_trace(*fx);

    // Four source mutations stay tropical-positive, the remaining twelve
    // run negative; the split point is exactly there.
    ASSERT_EQ(trace.size(), 16u);
    for (std::size_t t = 0; t < trace.size(); ++t)
        EXPECT_EQ(trace[t].eps, t < 4 ? 1 : -1) << "step " << t;

    DilogWord w = cluster::identity_from_loop(trace, fx->d);
    auto [lhs, rhs] = cluster::split_identity(w);

    IdentityFile f = cluster::load_identity_file(cluster::fixture_dir() + "/d4_identity.json");
    EXPECT_EQ(lhs, f.lhs);
    EXPECT_EQ(rhs, f.rhs);
    EXPECT_EQ(cluster::pairing_matrix(fx->B, fx->d), f.Lambda);
    EXPECT_EQ(fx->B.b, f.B);
    EXPECT_EQ(fx->d, f.d);
}

TEST(IdentityFromLoopTest, StarQuiverIdentityVerifies) {
    IdentityFile f = cluster::load_identity_file(cluster::fixture_dir() + "/d4_identity.json");
    cluster::VerifyOutcome out = cluster::verify_identity(f.lhs, f.rhs, f.Lambda, 6);
    EXPECT_TRUE(out.verified);
}

TEST(IdentityFromLoopTest, StarQuiverMirroredRhsRefuted) {
    IdentityFile f = cluster::load_identity_file(cluster::fixture_dir() + "/d4_identity.json");
    DilogWord mirrored(f.rhs.rbegin(), f.rhs.rend());
    cluster::VerifyOutcome out = cluster::verify_identity(f.lhs, mirrored, f.Lambda, 4);
    EXPECT_FALSE(out.verified);
    EXPECT_EQ(out.monomial, (std::vector<Int>{0, 0, 1, 1}));
}

TEST(IdentityFromLoopTest, Rank2EngineReproducesShippedPairs) {
    for (const char* name : {"a1a1", "a2", "b2", "g2"}) {
        const Fixture* fx = cluster::find_fixture(name);
        ASSERT_NE(fx, nullptr) << name;
        DilogWord w = cluster::identity_from_loop(fixture_trace(*fx), fx->d);
        auto [lhs, rhs] = cluster::split_identity(w);

        IdentityFile f = cluster::rank2_identity(fx->B.rank2_class(0, 1));
        EXPECT_EQ(lhs, f.lhs) << name;
        EXPECT_EQ(rhs, f.rhs) << name;
        EXPECT_EQ(cluster::pairing_matrix(fx->B, fx->d), f.Lambda) << name;
    }
}

TEST(IdentityFromLoopTest, GridLoopMatchesShippedPair) {
    const Fixture* fx = cluster::find_fixture("a3a3");
    ASSERT_NE(fx, nullptr);
    DilogWord w = cluster::identity_from_loop(fixture_trace(*fx), fx->d);
    ASSERT_EQ(w.size(), 36u);
    auto [lhs, rhs] = cluster::split_identity(w);

    // The shipped pair is the normal-ordered presentation; the loop emits
    // factors chronologically, so the sides agree up to commuting swaps.
    IdentityFile f = cluster::load_identity_file(cluster::fixture_dir() + "/a3a3_identity.json");
    IntMat L = cluster::pairing_matrix(fx->B, fx->d);
    EXPECT_EQ(f.Lambda, L);
    EXPECT_TRUE(cluster::words_equivalent_up_to_commutes(lhs, f.lhs, L));
    EXPECT_TRUE(cluster::words_equivalent_up_to_commutes(rhs, f.rhs, L));
    EXPECT_NE(lhs, f.lhs);
}

TEST(IdentityFromLoopTest, LoopWordsMultiplyToOne) {
    struct Case {
        const char* name;
        int degree;
    };
    for (Case c : {Case{"a2", 8}, Case{"b2", 8}, Case{"g2", 8}, Case{"d4", 6},
                   Case{"a3a3", 2}, Case{"genus1", 4}}) {
        const Fixture* fx = cluster::find_fixture(c.name);
        ASSERT_NE(fx, nullptr) << c.name;
        DilogWord w = cluster::identity_from_loop(fixture_trace(*fx), fx->d);
        IntMat L = cluster::pairing_matrix(fx->B, fx->d);
        EXPECT_TRUE(cluster::word_to_series(w, L, c.degree).is_one()) << c.name;
    }
}

TEST(IdentityFromLoopTest, ConeViolationAndSymmetrizerChecks) {
    StepTrace bad;
    bad.k = 0;
    bad.c = {1, -1};
    bad.eps = 1;
    EXPECT_THROW(cluster::identity_from_loop({bad}, {1, 1}), cluster::ConeViolation);

    StepTrace oob;
    oob.k = 2;
    oob.c = {1, 0};
    oob.eps = 1;
    EXPECT_THROW(cluster::identity_from_loop({oob}, {1, 1}), std::invalid_argument);
}

TEST(SplitIdentityTest, SignShapeValidation) {
    DilogWord mixed{{{1, 0}, 1, 1}, {{0, 1}, 1, -1}, {{1, 1}, 1, 1}};
    EXPECT_THROW(cluster::split_identity(mixed), std::invalid_argument);

    DilogWord all_pos{{{1, 0}, 1, 1}, {{0, 1}, 1, 1}};
    auto [lp, rp] = cluster::split_identity(all_pos);
    EXPECT_EQ(lp, all_pos);
    EXPECT_TRUE(rp.empty());

    DilogWord all_neg{{{1, 0}, 1, -1}, {{0, 1}, 1, -1}};
    auto [ln, rn] = cluster::split_identity(all_neg);
    EXPECT_TRUE(ln.empty());
    ASSERT_EQ(rn.size(), 2u);
    EXPECT_EQ(rn[0].alpha, (std::vector<Int>{0, 1}));
    EXPECT_EQ(rn[0].sign, 1);
    EXPECT_EQ(rn[1].alpha, (std::vector<Int>{1, 0}));
}

TEST(Rank2IdentityTest, InfiniteClassRejected) {
    EXPECT_THROW(cluster::rank2_identity(Rank2Class::Infinite), std::invalid_argument);
}

TEST(SeedJsonTest, RoundTrip) {
    const Fixture* fx = cluster::find_fixture("d4");
    SeedState s = cluster::make_seed(fx->B, cluster::sample_point(fx->B.n, 11));
    cluster::apply_sequence(s, {1, 4, 2});

    cluster::Json j = cluster::seed_to_json(s);
    SeedState back = cluster::seed_from_json(j);
    EXPECT_EQ(back.B.b, s.B.b);
    EXPECT_EQ(back.y, s.y);

    std::string path = testing::TempDir() + "seed_roundtrip.json";
    {
        std::ofstream out(path);
        out << j.dump(2) << "\n";
    }
    cluster::Json j2 = cluster::load_json_file(path);
    SeedState back2 = cluster::seed_from_json(j2);
    EXPECT_EQ(back2.y, s.y);
    std::remove(path.c_str());
}

}  // namespace
