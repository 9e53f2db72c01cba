/**
 * @file test_cli.cpp
 * @brief End-to-end tests driving the installed command-line binary.
 *
 * Each case shells out to the real executable and checks stdout plus
 * the exit-code contract: 0 verified, 1 refuted or open, 2 usage,
 * 3 resource limit.
 */
#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLUSTER_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

TEST(VerifyLoopCommand, ClassifiesFixtureLoops) {
    RunResult strict = run_cli("verify-loop --fixture genus1");
    EXPECT_EQ(strict.code, 0);
    EXPECT_TRUE(contains(strict.out, "strict")) << strict.out;
    EXPECT_TRUE(contains(strict.out, "length 32")) << strict.out;

    RunResult perm = run_cli("verify-loop --fixture a3a3");
    EXPECT_EQ(perm.code, 1);
    EXPECT_TRUE(contains(perm.out, "up_to_permutation")) << perm.out;
    EXPECT_TRUE(contains(perm.out, "[8,7,6,5,4,3,2,1,0]")) << perm.out;

    RunResult open = run_cli("verify-loop --fixture a2 --seq 1");
    EXPECT_EQ(open.code, 1);
    EXPECT_TRUE(contains(open.out, "open")) << open.out;
}

TEST(VerifyLoopCommand, SequenceOverrideClosesTheNonLoop) {
    RunResult r = run_cli("verify-loop --fixture a2 --seq 1,2,1,2,1,2,1,2,1,2");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "strict")) << r.out;
    EXPECT_TRUE(contains(r.out, "length 10")) << r.out;
}

TEST(IdentityCommand, RendersShorthandSplit) {
    RunResult r = run_cli("identity --fixture d4");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "16 factors")) << r.out;
    EXPECT_TRUE(contains(r.out, "signs ++++------------")) << r.out;
    EXPECT_TRUE(contains(r.out, "(1234)")) << r.out;
    EXPECT_TRUE(contains(r.out, "(12344)")) << r.out;
    EXPECT_TRUE(contains(
        r.out, "(1)(2)(3)(4) = (4)(34)(24)(14)(12344)(124)(134)(234)(1234)(3)(2)(1)"))
        << r.out;
}

TEST(IdentityCommand, LoopAliasResolves) {
    RunResult r = run_cli("identity --fixture a1a1-loop");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "4 factors")) << r.out;
    EXPECT_TRUE(contains(r.out, "(1)(2) = (2)(1)")) << r.out;
}

TEST(VerifySeriesCommand, VerifiesShippedIdentities) {
    RunResult pent = run_cli("verify-series --fixture pentagon -D 8");
    EXPECT_EQ(pent.code, 0);
    EXPECT_TRUE(contains(pent.out, "verified")) << pent.out;
    EXPECT_TRUE(contains(pent.out, "degree 8")) << pent.out;

    RunResult g2 = run_cli("verify-series --fixture g2 -D 8");
    EXPECT_EQ(g2.code, 0);
    EXPECT_TRUE(contains(g2.out, "verified")) << g2.out;
}

TEST(VerifySeriesCommand, RefutesReversedFactorOrder) {
    // the factors do not commute, so a reversed side changes the series
    RunResult id = run_cli("--json identity --fixture b2");
    ASSERT_EQ(id.code, 0);
    nlohmann::json j = nlohmann::json::parse(id.out);
    nlohmann::json rev = nlohmann::json::array();
    for (auto it = j["rhs"].rbegin(); it != j["rhs"].rend(); ++it) rev.push_back(*it);
    j["rhs"] = std::move(rev);
    std::string path = testing::TempDir() + "reversed_b2.json";
    std::ofstream(path) << j.dump();

    RunResult r = run_cli("verify-series --file " + path + " -D 4");
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "refuted at monomial (1,1)")) << r.out;
}

TEST(VerifySeriesCommand, GeneratesIdentityWhenNoneShipped) {
    RunResult r = run_cli("verify-series --fixture genus1 -D 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "verified")) << r.out;
}

TEST(CheckTraceCommand, ShippedTraceReplaysClean) {
    RunResult r = run_cli("check-trace");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "ok")) << r.out;
    EXPECT_TRUE(contains(r.out, "279 words")) << r.out;
    EXPECT_TRUE(contains(r.out, "pentagon_expand 49")) << r.out;

    RunResult missing = run_cli("check-trace --file /nonexistent/trace.jsonl");
    EXPECT_EQ(missing.code, 2);
}

TEST(SearchCommand, DerivesAndReportsBudgets) {
    RunResult d4 = run_cli("search --fixture d4");
    EXPECT_EQ(d4.code, 0);
    EXPECT_TRUE(contains(d4.out, "8 pentagon moves")) << d4.out;

    RunResult limited = run_cli("search --fixture a3a3 --max-steps 5");
    EXPECT_EQ(limited.code, 3);
    EXPECT_TRUE(contains(limited.out, "budget exhausted")) << limited.out;
}

TEST(SearchCommand, SavedTraceReplaysThroughCheckTrace) {
    std::string path = testing::TempDir() + "searched_a2.jsonl";
    RunResult s = run_cli("search --fixture a2 --out " + path);
    ASSERT_EQ(s.code, 0);
    RunResult c = run_cli("check-trace --file " + path);
    EXPECT_EQ(c.code, 0);
    EXPECT_TRUE(contains(c.out, "2 words")) << c.out;
}

TEST(RogersCommand, LoopSumsAndPointEvaluation) {
    RunResult d4 = run_cli("rogers --fixture d4");
    EXPECT_EQ(d4.code, 0);
    EXPECT_TRUE(contains(d4.out, "within tolerance")) << d4.out;

    RunResult post = run_cli("rogers --fixture d4 --convention post");
    EXPECT_EQ(post.code, 0);

    RunResult x = run_cli("rogers --x 0.5");
    EXPECT_EQ(x.code, 0);
    EXPECT_TRUE(contains(x.out, "0.82246703342411")) << x.out;

    EXPECT_EQ(run_cli("rogers --x 1.5").code, 2);
}

TEST(AkanCommand, GridGeneratorAndClosure) {
    RunResult plain = run_cli("akan 2 2");
    EXPECT_EQ(plain.code, 0);
    EXPECT_TRUE(contains(plain.out, "rank 4")) << plain.out;
    EXPECT_TRUE(contains(plain.out, "12 steps")) << plain.out;

    RunResult verify = run_cli("akan 2 2 --verify");
    EXPECT_EQ(verify.code, 1);
    EXPECT_TRUE(contains(verify.out, "up_to_permutation")) << verify.out;
    EXPECT_TRUE(contains(verify.out, "[3,2,1,0]")) << verify.out;

    RunResult doubled = run_cli("akan 2 2 --rounds 6 --verify");
    EXPECT_EQ(doubled.code, 0);
    EXPECT_TRUE(contains(doubled.out, "strict")) << doubled.out;

    RunResult grid33 = run_cli("akan 3 3 --verify");
    EXPECT_EQ(grid33.code, 1);
    EXPECT_TRUE(contains(grid33.out, "length 36")) << grid33.out;
}

TEST(ExploreCommand, SliceSummaryAndVertexBudget) {
    RunResult a2 = run_cli("explore --fixture a2 --depth 10");
    EXPECT_EQ(a2.code, 0);
    EXPECT_TRUE(contains(a2.out, "5 vertices")) << a2.out;

    RunResult limited = run_cli("explore --fixture genus1 --depth 6 --max-vertices 50");
    EXPECT_EQ(limited.code, 3);
    EXPECT_TRUE(contains(limited.out, "resource limit")) << limited.out;
}

TEST(ExploreCommand, DotOutputOnStdout) {
    RunResult r = run_cli("explore --fixture a2 --depth 10 --dot -");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "graph exchange {")) << r.out;
    EXPECT_TRUE(contains(r.out, "v4")) << r.out;
}

TEST(JsonOutput, IdentityRoundTripsIntoVerifySeries) {
    RunResult id = run_cli("--json identity --fixture d4");
    ASSERT_EQ(id.code, 0);
    nlohmann::json j = nlohmann::json::parse(id.out);
    for (const char* key : {"n", "Lambda", "lhs", "rhs", "B", "d"}) EXPECT_TRUE(j.contains(key));
    EXPECT_EQ(j["n"].get<int>(), 4);
    EXPECT_EQ(j["lhs"].size(), 4u);
    EXPECT_EQ(j["rhs"].size(), 12u);

    std::string path = testing::TempDir() + "d4_roundtrip.json";
    std::ofstream(path) << j.dump();
    RunResult vs = run_cli("verify-series --file " + path + " -D 6");
    EXPECT_EQ(vs.code, 0);
    EXPECT_TRUE(contains(vs.out, "verified")) << vs.out;
}

TEST(JsonOutput, LoopReportSchema) {
    RunResult r = run_cli("--json verify-loop --fixture a3a3");
    EXPECT_EQ(r.code, 1);
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["closure"], "up_to_permutation");
    EXPECT_EQ(j["length"], 36);
    EXPECT_EQ(j["perm"], nlohmann::json({8, 7, 6, 5, 4, 3, 2, 1, 0}));
}

TEST(JsonOutput, DeterministicForFixedSeed) {
    std::string args = "--json --seed 991 explore --fixture b2 --depth 8";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(first.out, second.out);
}

TEST(UsageErrors, ReportCodeTwo) {
    EXPECT_EQ(run_cli("").code, 2);
    EXPECT_EQ(run_cli("verify-loop").code, 2);
    EXPECT_EQ(run_cli("verify-loop --fixture nope").code, 2);
    EXPECT_EQ(run_cli("verify-series").code, 2);
    EXPECT_EQ(run_cli("explore --fixture a2 --mode sideways").code, 2);
    EXPECT_EQ(run_cli("akan 0 3").code, 2);
    EXPECT_EQ(run_cli("--help").code, 0);
    EXPECT_EQ(run_cli("identity --help").code, 0);
}

TEST(FixturesCommand, ListsRegistry) {
    RunResult r = run_cli("fixtures");
    EXPECT_EQ(r.code, 0);
    for (const char* name : {"d4", "genus1", "a3a3", "a2a2", "a1a1", "a2", "b2", "g2"})
        EXPECT_TRUE(contains(r.out, name)) << r.out;
    EXPECT_TRUE(contains(r.out, "d4_identity.json")) << r.out;
}

}  // namespace
