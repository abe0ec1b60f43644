#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "klein5/cli.hpp"

using namespace klein5;
using namespace klein5::cli;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "klein5");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Cli, AnalyzeInlineBuhler) {
  const auto r = run_cli({"analyze", "--b", "4", "--c", "16/5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  const auto& rec = j.at("records").at(0);
  EXPECT_EQ(rec.at("t"), "1");
  EXPECT_EQ(rec.at("hypothesis"), true);
  EXPECT_EQ(rec.at("C"), "16/5");
}

TEST(Cli, AnalyzeRecords) {
  const auto a = analyze_record({Rational(0), Rational(20), Rational(-16), {}});
  EXPECT_EQ(a.at("t"), "3/5");
  EXPECT_EQ(a.at("hypothesis"), false);
  const auto b = analyze_record({Rational(0), Rational(1), Rational(0), {}});
  EXPECT_TRUE(b.at("t").is_null());
  EXPECT_EQ(b.at("errors").at("t"), "C must be nonzero for t");
  const auto c = analyze_record({Rational(0), Rational(0), Rational(0), {}});
  EXPECT_TRUE(c.at("j_candidates").is_null());
  EXPECT_TRUE(c.at("errors").contains("j_candidates"));
}

TEST(Cli, AnalyzeFileKeepsOrderAcrossWorkers) {
  std::vector<QuinticRecord> recs;
  for (int k = 1; k <= 40; ++k) recs.push_back({Rational(0), Rational(k), Rational(k + 1, 3), std::to_string(k)});
  const auto parallel = analyze_batch(recs, 4);
  const auto serial = analyze_batch(recs, 1);
  ASSERT_EQ(parallel.size(), 40u);
  for (std::size_t k = 0; k < recs.size(); ++k) {
    EXPECT_EQ(parallel[k], serial[k]);
    EXPECT_EQ(parallel[k].at("label"), std::to_string(k + 1));
  }
}

TEST(Cli, AnalyzeFileJsonLines) {
  const std::string path = temp_path("klein5_in.jsonl");
  {
    std::ofstream f(path);
    f << R"({"B":"4","C":"16/5","label":"a"})" << "\n\n" << R"({"A":"1","B":2,"C":"-3/7"})" << "\n";
  }
  const auto r = run_cli({"analyze", "--file", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string l1, l2, l3;
  std::getline(lines, l1);
  std::getline(lines, l2);
  EXPECT_FALSE(std::getline(lines, l3));
  EXPECT_EQ(Json::parse(l1).at("label"), "a");
  EXPECT_EQ(Json::parse(l2).at("B"), "2");
  std::remove(path.c_str());
}

TEST(Cli, ParseErrorsExitTwo) {
  const std::string path = temp_path("klein5_bad.jsonl");
  {
    std::ofstream f(path);
    f << R"({"B":1.5,"C":"1"})" << "\n";
  }
  EXPECT_EQ(run_cli({"analyze", "--file", path}).code, 2);
  std::remove(path.c_str());
  EXPECT_EQ(run_cli({"analyze", "--b", "1/0", "--c", "1"}).code, 2);
  EXPECT_EQ(run_cli({"analyze"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_THROW(parse_record(Json::parse(R"({"C":"1"})")), std::invalid_argument);
  EXPECT_THROW(verify_suite("nonsense", {}), std::invalid_argument);
}

TEST(Cli, VerifySuitesPass) {
  for (const std::string s : {"repn", "hecke", "localfield", "klein-link"}) {
    const auto r = run_cli({"verify", s});
    EXPECT_EQ(r.code, 0) << s << r.out;
    EXPECT_EQ(Json::parse(r.out).at("status"), "pass") << s;
  }
}

TEST(Cli, VerifyQcurveDeterministic) {
  const auto a = run_cli({"verify", "qcurve", "--samples", "20", "--seed", "7", "--height", "100"});
  const auto b = run_cli({"verify", "qcurve", "--samples", "20", "--seed", "7", "--height", "100"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = Json::parse(a.out);
  EXPECT_EQ(j.at("seed"), 7);
  EXPECT_EQ(j.at("options").at("samples"), 20);
  EXPECT_EQ(j.at("options").at("height"), 100);
  EXPECT_FALSE(j.contains("wall_time_ms"));
}

TEST(Cli, LiteralFormsFail) {
  EXPECT_EQ(run_cli({"verify", "klein-link", "--literal"}).code, 1);
  const auto r = verify_suite("icosa", {20, 7, 1000, true});
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.checks.back().id, "resolvent-grid");
  EXPECT_EQ(r.checks.back().status, CheckStatus::fail);
}

TEST(Cli, ZeroSamplesWarns) {
  const auto r = run_cli({"verify", "qcurve", "--samples", "0", "--height", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("vacuous"), std::string::npos);
  EXPECT_TRUE(Json::parse(r.out).contains("warnings"));
}

TEST(Cli, TimingOnlyWhenAsked) {
  const auto r = run_cli({"--timing", "verify", "hecke"});
  EXPECT_TRUE(Json::parse(r.out).contains("wall_time_ms"));
}

TEST(Cli, OutPath) {
  const std::string path = temp_path("klein5_report.json");
  const auto r = run_cli({"verify", "hecke", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  EXPECT_EQ(Json::parse(f).at("suite"), "hecke");
  std::remove(path.c_str());
}

TEST(Cli, Table) {
  const auto r = run_cli({"table"});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("checks").size(), 5u);
  EXPECT_EQ(j.at("rows").size(), 5u);
  std::set<std::string> ts;
  for (const auto& row : j.at("rows")) {
    if (!row.at("t_principal").is_null()) ts.insert(row.at("t_principal").get<std::string>());
    if (!row.at("t_original").is_null()) ts.insert(row.at("t_original").get<std::string>());
  }
  EXPECT_EQ(ts, (std::set<std::string>{"3/5", "15/11", "1", "3", "3/2", "4/3"}));
}
