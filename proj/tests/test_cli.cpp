#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "shadow/cli/cli.hpp"
#include "support.hpp"

using namespace shadow;
using namespace shadow::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "shadow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& file) { return (testing_support::corpus_dir() / file).string(); }
std::string golden(const std::string& file) { return (testing_support::source_dir() / "tests/golden" / file).string(); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("shadow_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(CliProve, UmbrellaIsProvedWithObligationStep) {
  Result r = run_cli({"prove", corpus("umbrella.prob")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[I_O "), std::string::npos);
}

TEST(CliProve, MorningStarFails) { EXPECT_EQ(run_cli({"prove", corpus("morning_star.prob")}).code, 1); }

TEST(CliProve, ExhaustedExitCode) {
  EXPECT_EQ(run_cli({"prove", corpus("nested_belief.prob"), "--max-iterations", "1"}).code, 2);
}

TEST(CliProve, MalformedFileReportsPosition) {
  auto dir = scratch("malformed");
  write(dir / "bad.prob", "(problem (agents a)\n  (goal (P a)");
  Result r = run_cli({"prove", (dir / "bad.prob").string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("bad.prob:2:"), std::string::npos) << r.err;
}

TEST(CliProve, MissingFile) { EXPECT_EQ(run_cli({"prove", "/nonexistent/x.prob"}).code, 3); }

TEST(CliProve, UnknownFlag) { EXPECT_EQ(run_cli({"prove", corpus("umbrella.prob"), "--bogus"}).code, 3); }

TEST(CliProve, JsonRecord) {
  Result r = run_cli({"prove", corpus("umbrella.prob"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "proved");
  EXPECT_TRUE(j["proof"].contains("steps"));
  EXPECT_TRUE(j["stats"].contains("iterations"));
  EXPECT_FALSE(j["stats"].contains("wall_time_ms"));
}

TEST(CliProve, TimingsAddWallTime) {
  Result r = run_cli({"prove", corpus("umbrella.prob"), "--format", "json", "--timings"});
  EXPECT_TRUE(nlohmann::json::parse(r.out)["stats"].contains("wall_time_ms"));
}

TEST(CliProve, Deterministic) {
  for (const char* f : {"dde_compliant.prob", "nested_belief.prob", "answer_rescue.prob"}) {
    const char* cmd = std::string(f).rfind("answer", 0) == 0 ? "answer" : "prove";
    EXPECT_EQ(run_cli({cmd, corpus(f), "--format", "json"}).out, run_cli({cmd, corpus(f), "--format", "json"}).out);
  }
}

TEST(CliAnswer, TwoAnswers) {
  Result r = run_cli({"answer", corpus("answer_rescue.prob"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["answers"].size(), 2u);
  EXPECT_TRUE(j["answers"][0]["bindings"].contains("?y"));
}

TEST(CliAnswer, NoAnswersExitOne) { EXPECT_EQ(run_cli({"answer", corpus("answer_none.prob")}).code, 1); }

TEST(CliAnswer, MaxAnswersOne) {
  Result r = run_cli({"answer", corpus("answer_rescue.prob"), "--max-answers", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("answers: 1\n"), std::string::npos);
  EXPECT_EQ(r.out.find("answer 2:"), std::string::npos);
}

TEST(CliAnswer, NeedsQueryVariables) { EXPECT_EQ(run_cli({"answer", corpus("umbrella.prob")}).code, 3); }

TEST(CliCheck, GoldenProofIsValid) {
  EXPECT_EQ(run_cli({"check", golden("io.json"), golden("io.prob")}).code, 0);
}

TEST(CliCheck, TamperedProofIsInvalid) {
  auto dir = scratch("tampered");
  std::ifstream in(golden("io.json"));
  auto j = nlohmann::ordered_json::parse(in);
  j["steps"][0]["conclusion"] = "(believes a t1 CarryUmbrella)";
  write(dir / "p.json", j.dump());
  EXPECT_EQ(run_cli({"check", (dir / "p.json").string(), golden("io.prob")}).code, 1);
}

TEST(CliCheck, MismatchedProblemGivesReason) {
  Result r = run_cli({"check", golden("io.json"), golden("ib.prob")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invalid: step"), std::string::npos);
}

TEST(CliCorpus, ShippedCorpusPasses) {
  Result r = run_cli({"corpus", testing_support::corpus_dir().string()});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliCorpus, EmptyDirectory) {
  EXPECT_EQ(run_cli({"corpus", scratch("empty").string()}).code, 3);
}

TEST(CliCorpus, FailingExpectationIsNamed) {
  auto dir = scratch("failing");
  write(dir / "good.prob", "; expect: proved\n(problem (agents a) (times t1) (signature (pred P 0)) (assume p P) (goal P))\n");
  write(dir / "wrong.prob", "; expect: proved\n(problem (agents a) (times t1) (signature (pred P 0) (pred Q 0)) (assume p P) (goal Q))\n");
  Result r = run_cli({"corpus", dir.string()});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("wrong.prob"), std::string::npos);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("1/2 passed"), std::string::npos);
}

TEST(CliCorpus, ByteIdenticalReports) {
  std::string dir = testing_support::corpus_dir().string();
  EXPECT_EQ(run_cli({"corpus", dir}).out, run_cli({"corpus", dir}).out);
}

TEST(Expectation, ReadsHeader) {
  auto e = read_expectation("; expect: failed\n; expect-answers: 3\n(problem)");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->verdict, Verdict::kFailed);
  EXPECT_EQ(e->answers, 3u);
}

TEST(Expectation, StopsAtFirstForm) {
  EXPECT_FALSE(read_expectation("(problem)\n; expect: proved\n"));
  EXPECT_FALSE(read_expectation("; expect: maybe\n"));
}

TEST(ExitCodes, MatchVerdicts) {
  EXPECT_EQ(exit_code(Verdict::kProved), 0);
  EXPECT_EQ(exit_code(Verdict::kFailed), 1);
  EXPECT_EQ(exit_code(Verdict::kExhausted), 2);
}
