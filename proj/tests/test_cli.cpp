#include "qflag/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qflag {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string &name) {
  std::ifstream f(std::string(QFLAG_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Cli, GoldenOutputs) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"exterior", "--rank", "3", "--word", "nice", "--kmax", "7", "--format", "text"}, "exterior_rank3_nice.txt"},
      {{"coideal", "--rank", "4", "--word", "4321343234"}, "coideal_rank4_neither.txt"},
      {{"classes", "--rank", "3", "--format", "dot", "--involution"}, "classes_rank3.dot"},
      {{"survey", "--rank", "3"}, "survey_rank3.txt"},
      {{"survey", "--rank", "4", "--format", "json"}, "survey_rank4.json"},
      {{"roots", "--rank", "3"}, "roots_rank3_nice.txt"},
      {{"relations", "--rank", "2"}, "relations_rank2_nice.txt"},
      {{"frobenius", "--rank", "3", "--format", "json"}, "frobenius_rank3.json"},
      {{"coideal", "--rank", "3", "--word", "312132", "--witness", "--format", "json"}, "coideal_rank3_312132.json"},
  };
  for (const auto &[args, file] : cases) {
    CliRun r = run(args);
    EXPECT_EQ(r.code, 0) << file << ": " << r.err;
    EXPECT_EQ(r.out, golden(file)) << file;
  }
}

TEST(Cli, ExteriorExampleLine) {
  CliRun r = run({"exterior", "--rank", "3", "--word", "nice", "--kmax", "7", "--format", "text"});
  EXPECT_EQ(r.out, "dims: 1 6 15 20 15 6 1 0  classical: yes\n");
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string> &args :
       {std::vector<std::string>{"survey", "--rank", "4", "--threads", "1"},
        std::vector<std::string>{"classes", "--rank", "4", "--format", "json"}}) {
    CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
  }
  CliRun one = run({"survey", "--rank", "4", "--threads", "1"});
  CliRun many = run({"survey", "--rank", "4", "--threads", "4"});
  EXPECT_EQ(one.out, many.out);
}

TEST(Cli, JsonRoundTrips) {
  for (const std::vector<std::string> &args :
       {std::vector<std::string>{"survey", "--rank", "3", "--format", "json"},
        std::vector<std::string>{"exterior", "--rank", "2", "--tangent", "E1; E2; [E2,E1]_{t}", "--set", "t=1", "--format", "json"},
        std::vector<std::string>{"coideal", "--rank", "3", "--word", "231213", "--format", "json"},
        std::vector<std::string>{"dbar-kernel", "--rank", "2", "--format", "json"},
        std::vector<std::string>{"grassmann", "--rank", "3", "--r", "2", "--format", "json"}}) {
    CliRun r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
  }
}

TEST(Cli, JsonFields) {
  auto j = nlohmann::json::parse(run({"exterior", "--rank", "2", "--format", "json"}).out);
  EXPECT_EQ(j["dims"], nlohmann::json::parse("[1,3,3,1,0]"));
  EXPECT_EQ(j["classical"], true);
  auto f = nlohmann::json::parse(run({"frobenius", "--rank", "2", "--format", "json"}).out);
  EXPECT_EQ(f["nakayama_sign"], 1);
  auto c = nlohmann::json::parse(run({"coideal", "--rank", "2", "--tangent", "E1E2", "--format", "json"}).out);
  EXPECT_EQ(c["verdict"], "neither");
  EXPECT_FALSE(c["witness"].empty());
}

TEST(Cli, DotIsWellFormed) {
  CliRun r = run({"classes", "--rank", "4", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph classes_rank4 {\n", 0), 0u);
  EXPECT_EQ(r.out.substr(r.out.size() - 2), "}\n");
  std::istringstream is(r.out);
  std::string line;
  int nodes = 0;
  while (std::getline(is, line)) {
    if (line.find("[label=") != std::string::npos) ++nodes;
    if (line.size() > 2 && line != "}" && line.rfind("graph", 0) != 0) EXPECT_EQ(line.back(), ';') << line;
  }
  EXPECT_EQ(nodes, 62);
}

TEST(Cli, SurveyRows) {
  CliRun r2 = run({"survey", "--rank", "2"});
  EXPECT_EQ(r2.out,
            "121  two_sided  dims: 1 3 3 1 0  classical: yes\n"
            "212  two_sided  dims: 1 3 3 1 0  classical: yes\n");
  auto j = nlohmann::json::parse(run({"survey", "--rank", "3", "--format", "json"}).out);
  ASSERT_EQ(j["rows"].size(), 8u);
  int two = 0;
  for (const auto &row : j["rows"]) two += row["verdict"] == "two_sided";
  EXPECT_EQ(two, 2);
}

TEST(Cli, SurveyTruncationMarker) {
  CliRun r = run({"survey", "--rank", "3", "--max-rules", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# truncated: 8 classes"), std::string::npos);
  EXPECT_NE(r.out.find("321323  two_sided  truncated"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"coideal", "--rank", "3", "--word", "3214"}).code, 2);
  EXPECT_EQ(run({"coideal", "--rank", "3", "--word", "3213"}).code, 2);
  EXPECT_EQ(run({"coideal", "--rank", "2", "--tangent", "[E1,E2"}).code, 2);
  EXPECT_EQ(run({"coideal", "--rank", "2", "--tangent", "E1", "--word", "121"}).code, 2);
  EXPECT_EQ(run({"exterior", "--rank", "99"}).code, 2);
  EXPECT_EQ(run({"frobenius", "--format", "dot"}).code, 2);
  EXPECT_EQ(run({"nosuch"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"coideal", "--rank", "3", "--word", "321232", "--expect", "left_only"}).code, 0);
  CliRun bad = run({"coideal", "--rank", "3", "--word", "321232", "--expect", "two_sided"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "verdict: left_only\n");
  EXPECT_EQ(run({"exterior", "--rank", "2", "--tangent", "E1;E2;[E2,E1]_{t}", "--set", "t=1", "--expect", "classical"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace qflag
