#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "icat/cli.hpp"

using icat::run_cli;
using Json = nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GramGenericRankAndProbe) {
  const CliRun r = run({"gram", "--preset", "sym", "--pq", "2,2", "--t", "generic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["generic_rank"], 15);
  EXPECT_EQ(j["basis"].size(), 15u);
  EXPECT_TRUE(j["generic_probe"]["agree"]);
  EXPECT_EQ(j["tool"], icat::kToolVersion);
}

TEST(Cli, GramExceptionalValuesOfOrth) {
  const CliRun r = run({"gram", "--preset", "orth", "--pq", "2,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["generic_rank"], 3);
  std::vector<std::string> values;
  for (const auto& e : j["exceptional"]) values.push_back(e["value"]);
  EXPECT_EQ(values, (std::vector<std::string>{"-2", "0", "1"}));
}

TEST(Cli, MultiParameterGramUsesProbe) {
  const CliRun r = run({"gram", "--preset", "dvr", "--pq", "0,0", "--cutoff", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["generic_rank"], 1);
  EXPECT_EQ(j["generic_probe"]["points"].size(), 3u);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"goodness", "--preset", "sym", "--t", "7", "--N", "8", "--seed", "11"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["verdict"], "pass");
}

TEST(Cli, CsvUsesTheReportTable) {
  const CliRun r = run({"homdims", "--preset", "gl", "--pq-list", "1,1;2,2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "p,q,dimension,saturated,history\n1,1,1,true,0:1\n2,2,2,true,0:2\n");
}

TEST(Cli, LoyalVerdicts) {
  EXPECT_EQ(run({"loyal", "--alpha", "0,2,0,0,0"}).code, 0);
  EXPECT_EQ(run({"loyal", "--alpha", "1,2,3,4,5,6,7,8"}).code, 2);  // double pole at 1
  EXPECT_EQ(run({"loyal", "--alpha", "1,1,2"}).code, 1);            // too short
}

TEST(Cli, GoodnessNeedsAPointForParametrizedPresets) {
  const CliRun r = run({"goodness", "--preset", "sym"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--t"), std::string::npos);
}

TEST(Cli, InterpolationMatchesClosedForm) {
  const CliRun r = run({"interpolate", "--preset", "sym", "--points", "1,2,3,4",
                     "--diagram", "boxes: []; wires: []; loops: 1; in: 0; out: 0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["agree"]);
}

TEST(Cli, SimplesAtAPoint) {
  const CliRun r = run({"simples", "--preset", "sym", "--p", "2", "--t", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["dimension"], 1);
  EXPECT_TRUE(j["semisimple"]);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"gram", "--preset", "nope"}).code, 1);
  EXPECT_EQ(run({"gram", "--pq", "1"}).code, 1);
  EXPECT_EQ(run({"gram", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"gram", "--config", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, PresetsList) {
  const CliRun r = run({"presets", "list"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["presets"].size(), 8u);
}
