// Copyright 2026 The djdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "djdisc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "djdisc/json_io.hpp"

namespace djdisc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return parse_json(out); }
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "djdisc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("djdisc_cli_" + name);
  std::ofstream(path) << text;
  return path;
}

TEST(VerifyChannel, PassesAtTwoBits) {
  const Result r = run_cli({"verify-channel", "--n", "2", "--samples", "50", "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_LE(r.json()["max_residual"].get<double>(), 1e-10);
  EXPECT_EQ(r.json()["oracle_count"].get<int>(), 6);
}

TEST(VerifyChannel, SmallestCase) {
  EXPECT_EQ(run_cli({"verify-channel", "--n", "1", "--samples", "1", "--seed", "1"}).code, kExitOk);
}

TEST(VerifyChannel, ResourceLimit) {
  const Result r = run_cli({"verify-channel", "--n", "9"});
  EXPECT_EQ(r.code, kExitResourceLimit);
  EXPECT_NE(r.err.find("ResourceLimit"), std::string::npos);
}

TEST(Certify, UniformStateFile) {
  const auto path = write_temp("uniform.json",
                               R"({"dim":4,"amplitudes":[[0.5,0],[0,0.5],[-0.5,0],[0.5,0]]})");
  const Result r = run_cli({"certify", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  for (const char* key : {"commutator_residual", "lambda_rho_residual", "orthogonality_residual"}) {
    EXPECT_LE(j[key].get<double>(), 1e-12) << key;
  }
  EXPECT_TRUE(j["verdict"].get<bool>());
  std::filesystem::remove(path);
}

TEST(Certify, BasisStateFails) {
  const auto path = write_temp("zero.json", R"({"dim":2,"amplitudes":[[1,0],[0,0]]})");
  const Result r = run_cli({"certify", "--input", path.string()});
  EXPECT_EQ(r.code, kExitPropertyFailure);
  EXPECT_NEAR(r.json()["lambda_rho_residual"].get<double>(), 1.0, 1e-12);
  EXPECT_FALSE(r.json()["verdict"].get<bool>());
  std::filesystem::remove(path);
}

TEST(Certify, TruncatedJsonIsInputError) {
  const auto path = write_temp("truncated.json", R"({"dim":2,"amplitudes":[[1,0],)");
  EXPECT_EQ(run_cli({"certify", path.string()}).code, kExitInputError);
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"certify", "/nonexistent/djdisc.json"}).code, kExitInputError);
}

TEST(Sweep, ExhaustiveThreeBits) {
  const Result r = run_cli({"sweep", "--n", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["oracle_count"].get<int>(), 72);
  EXPECT_NEAR(j["min_success"].get<double>(), 1.0, 1e-10);
  EXPECT_EQ(j.size(), 4u);
}

TEST(Sweep, ArbitraryPhases) {
  EXPECT_EQ(run_cli({"sweep", "--n", "2", "--phases", "0,3.14159,0,0"}).code, kExitOk);
}

TEST(Sweep, UninformativeMeasurementFails) {
  const Result r = run_cli({"sweep", "--n", "2", "--povm", "identity-half"});
  EXPECT_EQ(r.code, kExitPropertyFailure);
  EXPECT_NEAR(r.json()["min_success"].get<double>(), 0.5, 1e-15);
}

TEST(Sweep, BadArguments) {
  EXPECT_EQ(run_cli({"sweep", "--n", "2", "--phases", "0,1"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"sweep", "--n", "2", "--povm", "bogus"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"sweep", "--n", "4"}).code, kExitResourceLimit);
  EXPECT_EQ(run_cli({"sweep", "--n", "0"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"sweep"}).code, kExitInputError);
  EXPECT_EQ(run_cli({}).code, kExitInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitInputError);
}

TEST(Search, FindsPerfectState) {
  const Result r = run_cli({"search", "--n", "2", "--seed", "7", "--restarts", "20"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_GE(j["success"].get<double>(), 1.0 - 1e-6);
  EXPECT_TRUE(j["is_perfect_initial_state"].get<bool>());
  EXPECT_EQ(j["state"]["dim"].get<int>(), 4);
}

TEST(Search, ZeroBudgetFails) {
  const Result r =
      run_cli({"search", "--n", "1", "--restarts", "0", "--iterations", "0", "--seed", "7"});
  EXPECT_EQ(r.code, kExitPropertyFailure);
  EXPECT_LT(r.json()["success"].get<double>(), 1.0 - 1e-6);
}

TEST(Search, ResourceLimit) {
  EXPECT_EQ(run_cli({"search", "--n", "8"}).code, kExitResourceLimit);
}

TEST(Classical, Examples) {
  const Result two = run_cli({"classical", "--n", "2"});
  ASSERT_EQ(two.code, kExitOk) << two.err;
  EXPECT_EQ(two.json()["insufficient_queries"].get<int>(), 2);
  EXPECT_EQ(two.json()["sufficient_queries"].get<int>(), 3);

  const Result one = run_cli({"classical", "--n", "1"});
  ASSERT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.json()["sufficient_queries"].get<int>(), 2);

  EXPECT_EQ(run_cli({"classical", "--n", "5"}).code, kExitResourceLimit);
}

TEST(Reports, ByteIdenticalAcrossRuns) {
  const std::vector<std::vector<std::string>> commands = {
      {"verify-channel", "--n", "3", "--samples", "5", "--seed", "99"},
      {"search", "--n", "1", "--seed", "3", "--restarts", "2", "--iterations", "20"},
      {"sweep", "--n", "2", "--phases", "0.1,0.2,0.3,0.4"},
      {"classical", "--n", "3"},
  };
  for (const auto& cmd : commands) {
    const Result a = run_cli(cmd);
    const Result b = run_cli(cmd);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << cmd.front();
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Reports, CsvFlattensScalars) {
  const Result r = run_cli({"search", "--n", "1", "--seed", "7", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto newline = r.out.find('\n');
  const std::string header = r.out.substr(0, newline);
  EXPECT_EQ(header, "command,n,seed,restarts,iterations,success,best_restart,is_perfect_initial_state");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST(Reports, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "djdisc_cli_report.json";
  const Result r = run_cli({"classical", "--n", "2", "--output", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_TRUE(parse_json(text.str())["verified"].get<bool>());
  std::filesystem::remove(path);
}

TEST(Tolerance, EnvironmentOverride) {
  // A residual of ~1e-16 fails only under an absurdly strict tolerance.
  ::setenv("DJDISC_TOL", "1e-300", 1);
  const Result strict = run_cli({"sweep", "--n", "3"});
  ::setenv("DJDISC_TOL", "not-a-number", 1);
  const Result garbage = run_cli({"sweep", "--n", "3"});
  ::unsetenv("DJDISC_TOL");
  EXPECT_EQ(strict.code, kExitPropertyFailure);
  EXPECT_EQ(garbage.code, kExitInputError);
  // An explicit flag wins over the environment.
  ::setenv("DJDISC_TOL", "1e-300", 1);
  const Result flagged = run_cli({"sweep", "--n", "3", "--tol", "1e-9"});
  ::unsetenv("DJDISC_TOL");
  EXPECT_EQ(flagged.code, kExitOk);
}

}  // namespace
}  // namespace djdisc::cli
