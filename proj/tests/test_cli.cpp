#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qtrin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ComputeTrinomial) {
    const auto r = run({"compute", "T", "4", "2"});
    EXPECT_EQ(r.code, qtrin::cli::kOk);
    EXPECT_EQ(r.out, "1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6\n");
}

TEST(Cli, ComputeJsonIsParseable) {
    const auto r = run({"compute", "rT", "4", "2", "2", "1", "--format", "json"});
    ASSERT_EQ(r.code, qtrin::cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("value"), "1 + 2*q + 4*q^2 + 5*q^3 + 4*q^4 + 2*q^5 + q^6");
}

TEST(Cli, ComputeSeriesShowsOrder) {
    EXPECT_EQ(run({"compute", "chi", "3", "4", "1", "1", "--order", "6"}).out,
              "1 + q^2 + q^3 + 2*q^4 + 2*q^5 + O(q^6)\n");
    EXPECT_EQ(run({"compute", "c", "0", "--order", "4"}).out, "1 + q + 3*q^2 + 5*q^3 + O(q^4)\n");
}

TEST(Cli, NegativePositionalsAreValues) {
    const auto r = run({"compute", "T", "4", "-2"});
    EXPECT_EQ(r.code, qtrin::cli::kOk);
    EXPECT_EQ(r.out, run({"compute", "T", "4", "2"}).out);
}

TEST(Cli, MnSolveParitySplit) {
    auto lines = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
    EXPECT_EQ(lines(run({"mn-solve", "E7", "6", "1"}).out), 11);
    EXPECT_EQ(lines(run({"mn-solve", "E7", "6", "1", "--parity", "n1+n3+n7"}).out), 5);
    EXPECT_EQ(lines(run({"mn-solve", "E7", "6", "1", "--parity", "n1+n3+n7+1"}).out), 6);
    const auto r = run({"mn-solve", "E7", "6", "1", "--parity", "n1+n3+n7"});
    EXPECT_NE(r.out.find("m=5e1+4e2+3e3+2e4+e7 n=e5\n"), std::string::npos);
}

TEST(Cli, VerifyPassAndUnknown) {
    const auto ok = run({"verify", "thm1", "--grid", "L=0..2,M=0..2,a=0..1,b=0..1"});
    EXPECT_EQ(ok.code, qtrin::cli::kOk);
    EXPECT_EQ(ok.out,
              "PASS thm1 [proved-in-paper, polynomial-exact] points=36 grid=L=0..2,M=0..2,a=0..1,b=0..1\n"
              "OK 1 identities\n");
    EXPECT_EQ(run({"verify", "nope"}).code, qtrin::cli::kUsage);
    EXPECT_EQ(run({"verify", "thm1", "--grid", "Z=1"}).code, qtrin::cli::kUsage);
}

TEST(Cli, VerifyWritesJsonReport) {
    const std::string path = ::testing::TempDir() + "qtrin_cli_report.json";
    const auto r = run({"verify", "dual", "--level", "quick", "--json", path});
    ASSERT_EQ(r.code, qtrin::cli::kOk);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.at(0).at("identity"), "dual");
    EXPECT_TRUE(j.at(0).at("failures").empty());
    EXPECT_EQ(j.at(0).at("passed"), true);
    std::remove(path.c_str());
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args = {"verify", "all", "--level", "quick", "--threads", "4"};
    const auto a = run(args);
    EXPECT_EQ(a.code, qtrin::cli::kOk);
    EXPECT_EQ(a.out, run(args).out);
    EXPECT_EQ(a.out, run({"verify", "all", "--level", "quick", "--threads", "1"}).out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"compute", "chi", "4", "6", "1", "1"}).code, qtrin::cli::kUsage);
    EXPECT_EQ(run({"compute", "ferm", "G2"}).code, qtrin::cli::kUsage);
    EXPECT_EQ(run({"algebra", "show", "G2"}).code, qtrin::cli::kUsage);
    EXPECT_EQ(run({"mn-solve", "E7", "6", "9"}).code, qtrin::cli::kUsage);
    EXPECT_EQ(run({"bogus"}).code, qtrin::cli::kUsage);
    EXPECT_EQ(run({}).code, qtrin::cli::kUsage);
    EXPECT_EQ(run({"--help"}).code, qtrin::cli::kOk);
}

TEST(Cli, AlgebraShow) {
    const auto r = run({"algebra", "show", "E7", "--format", "json"});
    ASSERT_EQ(r.code, qtrin::cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("rank"), 7);
    EXPECT_EQ(j.at("cartan").at(0).at(0), 2);
}
