#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "test_support.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tpolar::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, MultidegreesJson) {
  CliRun r = run({"multidegrees", "--poly", "x1^2+x0*x1+x0*x2", "--vars", "x0,x1,x2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["map"], "toric");
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["degree"], 1);
  EXPECT_EQ(j["multidegrees"], nlohmann::json({1, 2, 1}));
  EXPECT_EQ(j["prime"], 2147483647);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["trials"], 2);
}

TEST(Cli, FieldOrderIsFrozen) {
  CliRun r = run({"multidegrees", "--poly", "x0^2-x1*x2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "{\"map\":\"toric\",\"n\":2,\"degree\":0,\"multidegrees\":[1,2,0],\"prime\":2147483647,\"seed\":42,"
            "\"trials\":2}\n");
}

TEST(Cli, GradientFlag) {
  CliRun r = run({"multidegrees", "--poly", "x0*x1*x2", "--gradient", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["map"], "gradient");
  EXPECT_EQ(json_of(r)["multidegrees"], nlohmann::json({1, 2, 1}));
}

TEST(Cli, ParseErrorExitsTwoWithPosition) {
  CliRun r = run({"multidegrees", "--poly", "x0^2 + * x1", "--vars", "x0,x1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position"), std::string::npos);
  EXPECT_EQ(run({"multidegrees", "--poly", "y^2"}).code, 2);
  EXPECT_EQ(run({"multidegrees"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, PreconditionExitsThree) {
  EXPECT_EQ(run({"multidegrees", "--poly", "x0*x1 + x0*x2"}).code, 3);
  EXPECT_EQ(run({"multidegrees", "--poly", "x0^2 + x1"}).code, 3);
  EXPECT_EQ(run({"multidegrees", "--poly", "x0 + x1", "--prime", "91"}).code, 3);
  EXPECT_EQ(run({"multidegrees", "--poly", "x0 + x1", "--trials", "0"}).code, 3);
  EXPECT_EQ(run({"curve", "--poly", "x0 + x1 + x2 + x3"}).code, 3);
  EXPECT_EQ(run({"multidegrees", "--file", "/nonexistent/poly.txt"}).code, 3);
}

TEST(Cli, CsmExamples) {
  CliRun r = run({"csm", "--poly", tpolar::testing::kKapranov, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["class"], nlohmann::json({1, -3, 2}));
  EXPECT_EQ(json_of(r)["euler_complement"], 2);
  EXPECT_EQ(json_of(r)["euler_hypersurface_off_coordinates"], -2);
  CliRun f3 = run({"csm", "--poly", "x1*x2*x3 + x0*x2*x3 + x0*x1*x3 + x0*x1*x2", "--json"});
  EXPECT_EQ(json_of(f3)["class"], nlohmann::json({1, -3, 3, -1}));
  EXPECT_EQ(json_of(f3)["euler_complement"], -1);
  CliRun q2 = run({"csm", "--poly", "x1^2 + x0*x1 + x0*x2", "--json"});
  EXPECT_EQ(json_of(q2)["class"], nlohmann::json({1, -2, 1}));
  EXPECT_EQ(json_of(q2)["euler_complement"], 1);
}

TEST(Cli, CurveReportMatchesFrozenJson) {
  CliRun r = run({"curve", "--poly", tpolar::testing::kKapranov, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"k\":3,\"milnor_sum\":2,\"incidence\":2,\"tangency\":3,\"degree\":2,\"engine_degree\":2}\n");
}

TEST(Cli, VerifyDefaultCorpus) {
  CliRun r = run({"verify", "--seed", "42"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
}

TEST(Cli, VerifyWrongExpectation) {
  const std::string path = ::testing::TempDir() + "tpolar_bad_corpus.txt";
  {
    std::ofstream f(path);
    f << "kapranov-wrong | x0,x1,x2 | " << tpolar::testing::kKapranov << " | 1,3,3\n";
  }
  CliRun r = run({"verify", "--file", path, "--json"});
  EXPECT_EQ(r.code, 1);
  auto j = json_of(r);
  EXPECT_GE(j["failed"].get<int>(), 1);
  bool named = false;
  for (const auto& c : j["checks"])
    if (!c["passed"].get<bool>()) named = named || c["name"] == "multidegrees:kapranov-wrong";
  EXPECT_TRUE(named);
  std::remove(path.c_str());
}

TEST(Cli, FileInputAndVariableInference) {
  const std::string path = ::testing::TempDir() + "tpolar_poly.txt";
  {
    std::ofstream f(path);
    f << "x1^2 + x0*x1 + x0*x2 + x0*x3\n";
  }
  CliRun r = run({"multidegrees", "--file", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["multidegrees"], nlohmann::json({1, 2, 2, 1}));
  std::remove(path.c_str());
  EXPECT_EQ(run({"multidegrees", "--file", path, "--poly", "x0"}).code, 2);
}

TEST(Cli, ByteIdenticalOutput) {
  std::vector<std::string> args = {"multidegrees", "--poly", tpolar::testing::kKapranov, "--seed", "5", "--trials", "3",
                                   "--prime", "32003", "--json"};
  CliRun a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json_of(a)["multidegrees"], nlohmann::json({1, 3, 2}));
  EXPECT_EQ(json_of(a)["prime"], 32003);
}

TEST(Cli, HelpExitsZero) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("multidegrees"), std::string::npos);
}
