#include "hypertoric/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hypertoric {
namespace {

const char* kExample = "1 0 -2 -2\n0 1 -3 -3\n";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = kExample) {
  args.insert(args.begin(), "hypertoric");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EveryCommandSucceedsOnExample) {
  for (const auto& cmd : cli::commands()) {
    std::vector<std::string> args{cmd};
    if (cmd == "generic-check") args.insert(args.end(), {"--alpha", "1 1"});
    const auto text = run_cli(args);
    EXPECT_EQ(text.code, 0) << cmd << ": " << text.err;
    EXPECT_FALSE(text.out.empty()) << cmd;

    args.push_back("--json");
    const auto json = run_cli(args);
    ASSERT_EQ(json.code, 0) << cmd << ": " << json.err;
    EXPECT_NO_THROW(Json::parse(json.out)) << cmd;
  }
}

TEST(Cli, ReportOnExample) {
  const auto r = run_cli({"report"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc.find("schema")->as_string(), "hypertoric-report/1");
  EXPECT_EQ(doc.find("classification")->find("verdict")->as_string(), "codim2-singular");
  EXPECT_TRUE(doc.find("crepant")->find("exists")->as_bool());
  EXPECT_EQ(doc.find("weyl_factors")->dump(), "[5, 1, 1]");
  EXPECT_EQ(doc.find("weyl_order")->number_text(), "120");
  EXPECT_EQ(doc.find("primitivization")->find("b_sharp")->find("rows")->number_text(), "7");
  EXPECT_EQ(doc.find("hyperplanes")->find("count")->number_text(), "3");
  EXPECT_EQ(doc.find("timing"), nullptr);
}

TEST(Cli, ReportIsByteStable) {
  EXPECT_EQ(run_cli({"report"}).out, run_cli({"report"}).out);
  const auto timed = run_cli({"report", "--timing"});
  EXPECT_NE(Json::parse(timed.out).find("timing"), nullptr);
}

TEST(Cli, NonSurjectiveIsRejected) {
  const auto r = run_cli({"classify"}, "0 -2 -2\n1 -3 -3\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("standing assumption"), std::string::npos);
  EXPECT_NE(r.err.find("surjection"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ZeroGaleRowIsRejected) {
  const auto r = run_cli({"terminalize"}, "1 1 0\n0 0 1\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("row 3 is zero"), std::string::npos);
}

TEST(Cli, GenericCheck) {
  EXPECT_EQ(run_cli({"generic-check", "--alpha", "1 1"}).out, "generic: true\n");
  EXPECT_EQ(run_cli({"generic-check", "--alpha", "0 5"}).out, "generic: false\n");
  EXPECT_EQ(run_cli({"generic-check", "--alpha", "1 1 1"}).code, 1);
  EXPECT_EQ(run_cli({"generic-check"}).code, 1);
}

TEST(Cli, ReadsJsonAndFiles) {
  const auto path = std::filesystem::temp_directory_path() / "hypertoric_cli_test.json";
  {
    std::ofstream f(path);
    f << R"({"rows": 2, "cols": 4, "entries": [[1, 0, -2, -2], [0, 1, -3, -3]]})";
  }
  const auto r = run_cli({"weyl", "--input", path.string()}, "");
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("120"), std::string::npos);
  EXPECT_EQ(run_cli({"weyl", "--input", "/nonexistent/matrix.txt"}).code, 1);
}

TEST(Cli, TerminalizePaths) {
  const auto direct = Json::parse(run_cli({"terminalize", "--json"}).out);
  const auto iterated =
      Json::parse(run_cli({"terminalize", "--json", "--path", "iterated", "--show-steps"}).out);
  EXPECT_EQ(direct.find("path")->as_string(), "direct");
  EXPECT_EQ(iterated.find("steps")->as_array().size(), 2u);
  EXPECT_EQ(direct.find("b_sharp")->dump(), iterated.find("b_sharp")->dump());
  EXPECT_EQ(run_cli({"terminalize", "--path", "sideways"}).code, 1);
}

TEST(Cli, ExpandStepColumn) {
  const auto r = Json::parse(run_cli({"expand-step", "--json", "--column", "1"}).out);
  EXPECT_EQ(r.find("A_prime")->find("entries")->dump(),
            "[\n  [1, 0, 0, -1, -1],\n  [0, 0, 1, -3, -3],\n  [1, -1, 0, 0, 0]\n]");
  EXPECT_EQ(run_cli({"expand-step", "--column", "3"}).code, 1);
}

TEST(Cli, EnumerationGuard) {
  const auto r = run_cli({"stratify", "--max-enumeration", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  // 2^5 subsets for the strata, at most 5 for everything else.
  const auto report =
      Json::parse(run_cli({"report", "--max-enumeration", "10"}, "1 1 1 1 1\n").out);
  EXPECT_NE(report.find("stratification")->find("skipped"), nullptr);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"snf", "--bogus"}).code, 1);
  EXPECT_EQ(run_cli({"snf", "--help"}).code, 0);
  EXPECT_EQ(run_cli({"classify"}, "1 2\n3\n").code, 1);
}

TEST(Cli, BigIntegersPassThrough) {
  const std::string big = "100000000000000000000000000007";
  const auto r = run_cli({"snf", "--json"}, "1 " + big + "\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(big), std::string::npos);
}

}  // namespace
}  // namespace hypertoric
