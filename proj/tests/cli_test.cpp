#include "rpt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace rpt {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, StirlingCsvReproducesPrintedMatrix)
{
    const auto r = call({"stirling", "--set", "{1,3,6}", "--n", "8", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "n,0,1,2,3,4,5,6,7,8\n"
              "0,1,0,0,0,0,0,0,0,0\n"
              "1,0,1,0,0,0,0,0,0,0\n"
              "2,0,0,1,0,0,0,0,0,0\n"
              "3,0,1,0,1,0,0,0,0,0\n"
              "4,0,0,4,0,1,0,0,0,0\n"
              "5,0,0,0,10,0,1,0,0,0\n"
              "6,0,1,10,0,20,0,1,0,0\n"
              "7,0,0,7,70,0,35,0,1,0\n"
              "8,0,0,0,28,280,0,56,0,1\n");
}

TEST(Cli, JsonDocumentShape)
{
    const auto r = call({"bell", "--set", "all", "--n", "0", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["command"], "bell");
    EXPECT_EQ(doc["params"]["set"], "all");
    ASSERT_EQ(doc["values"].size(), 1u);
    EXPECT_EQ(doc["values"][0]["value"], "1");
    EXPECT_EQ(doc["provenance"]["routes_compared"].size(), 2u);
    EXPECT_EQ(doc["provenance"]["agreed"], true);
}

TEST(Cli, RationalsAreStrings)
{
    const auto r = call({"polybernoulli", "--n", "3", "--k", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["values"][3]["value"], "-1/24");
    EXPECT_EQ(doc["values"][1]["value"], "1/4");
}

TEST(Cli, NegativePolyBernoulliIndex)
{
    const auto r = call({"polybernoulli", "--n", "2..2", "--k", "-2", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "n,k,value\n2,-2,14\n");
}

TEST(Cli, RiordanInverse)
{
    const auto r = call({"riordan", "--set", "{1,3,6}", "--n", "8..8", "--inverse", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "n,0,1,2,3,4,5,6,7,8\n8,0,84,-2800,-28,840,0,-56,0,1\n");
}

TEST(Cli, BellPolynomials)
{
    const auto r = call({"bell", "--set", "{1,3,6}", "--n", "6..6", "--polynomial", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "n,polynomial\n6,x^6+20x^4+10x^2+x\n");
}

TEST(Cli, LonesumCounts)
{
    auto r = call({"lonesum", "--n", "2..2", "--k", "2..2", "--with-zeros", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "n,k,count\n2,2,14\n");
    r = call({"lonesum", "--n", "2..2", "--k", "2..2", "--format", "csv"});
    EXPECT_EQ(r.out, "n,k,count\n2,2,5\n");
}

TEST(Cli, MatrixFile)
{
    const std::string path = ::testing::TempDir() + "rpt_cli_matrix.txt";
    std::ofstream(path) << "10\n11\n";
    const auto r = call({"lonesum", "--matrix", path, "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["values"][0]["lonesum"], true);
    EXPECT_EQ(doc["values"][0]["row_blocks"], nlohmann::json::parse("[[1],[2]]"));
    EXPECT_EQ(doc["values"][0]["col_blocks"], nlohmann::json::parse("[[1],[2]]"));
}

TEST(Cli, VerifyLonesumSuite)
{
    const auto r = call({"verify", "--suite", "lonesum", "--max-cells", "12"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST(Cli, OutputIsStableAcrossRunsAndWorkers)
{
    const auto one = call({"decomposable", "--n", "3", "--k", "3", "--workers", "1", "--format", "json"});
    const auto four = call({"decomposable", "--n", "3", "--k", "3", "--workers", "4", "--format", "json"});
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(one.out, four.out);
    EXPECT_EQ(one.out, call({"decomposable", "--n", "3", "--k", "3", "--format", "json"}).out);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(call({}).code, cli::usage_error);
    EXPECT_EQ(call({"frobnicate"}).code, cli::usage_error);
    EXPECT_EQ(call({"stirling", "--set", "evens", "--n", "3"}).code, cli::usage_error);
    EXPECT_EQ(call({"stirling", "--set", "all"}).code, cli::usage_error);
    EXPECT_EQ(call({"stirling", "--n", "x"}).code, cli::usage_error);
    EXPECT_EQ(call({"stirling", "--n", "-1"}).code, cli::usage_error);
    EXPECT_EQ(call({"stirling", "--n", "4", "--format", "xml"}).code, cli::usage_error);
    EXPECT_EQ(call({"verify", "--suite", "nope"}).code, cli::usage_error);
    EXPECT_EQ(call({"riordan", "--set", "even", "--n", "3"}).code, cli::usage_error);
    EXPECT_EQ(call({"polybernoulli", "--n", "5", "--k", "2", "--order", "3"}).code, cli::usage_error);
    EXPECT_EQ(call({"fubini", "--n", "3", "--q", "0"}).code, cli::usage_error);
    EXPECT_EQ(call({"--help"}).code, cli::ok);
}

TEST(Cli, Guardrails)
{
    EXPECT_EQ(call({"verify", "--suite", "lonesum", "--max-cells", "30"}).code, cli::guardrail);
    EXPECT_EQ(call({"verify", "--suite", "stirling", "--n", "11"}).code, cli::guardrail);
    ::setenv("RPT_MAX_CELLS", "6", 1);
    EXPECT_EQ(call({"verify", "--suite", "lonesum", "--max-cells", "8"}).code, cli::guardrail);
    ::unsetenv("RPT_MAX_CELLS");
}

TEST(Cli, Ranges)
{
    const auto a = cli::parse_range("5", true);
    EXPECT_EQ(a.lo, 0);
    EXPECT_EQ(a.hi, 5);
    const auto b = cli::parse_range("-4..4", false);
    EXPECT_EQ(b.lo, -4);
    EXPECT_EQ(b.hi, 4);
    const auto c = cli::parse_range("-3", false);
    EXPECT_EQ(c.lo, -3);
    EXPECT_EQ(c.hi, -3);
    EXPECT_THROW(cli::parse_range("4..2", false), std::invalid_argument);
    EXPECT_THROW(cli::parse_range("1..", false), std::invalid_argument);
}

}  // namespace
}  // namespace rpt
