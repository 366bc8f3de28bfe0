// Copyright 2026 The kopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kopt/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace kopt {
namespace {

using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(::testing::TempDir()) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    std::filesystem::create_directories(dir_);
  }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  // Writes a random instance and tour; returns {instance, tour} paths.
  std::pair<std::string, std::string> Generate(int n, int seed) {
    const std::string inst = Path("inst" + std::to_string(seed) + ".json");
    const std::string tour = Path("tour" + std::to_string(seed) + ".json");
    const Outcome r = Invoke({"gen", "--type", "random", "--n", std::to_string(n),
                          "--seed", std::to_string(seed), "--wmax", "100",
                          "--out-instance", inst, "--out-tour", tour});
    EXPECT_EQ(r.code, 0) << r.err;
    return {inst, tour};
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(Invoke({"--help"}).code, 0);
  EXPECT_EQ(Invoke({"find-move", "--help"}).code, 0);
  EXPECT_EQ(Invoke({}).code, kExitError);
  EXPECT_EQ(Invoke({"no-such-command"}).code, kExitError);
  EXPECT_EQ(Invoke({"find-move"}).code, kExitError);
  EXPECT_EQ(Invoke({"find-move", "--k", "3", "--in", Path("missing.json")}).code,
            kExitError);
  const auto [inst, tour] = Generate(10, 1);
  EXPECT_EQ(Invoke({"find-move", "--k", "12", "--in", inst}).code, kExitError);
  EXPECT_EQ(Invoke({"find-move", "--k", "3", "--in", inst, "--alpha", "2"})
                .code,
            kExitError);
  EXPECT_EQ(Invoke({"find-move", "--k", "3", "--in", inst, "--mode", "fast"})
                .code,
            kExitError);
}

TEST_F(CliTest, FindMoveDpMatchesNaive) {
  for (int seed = 1; seed <= 3; ++seed) {
    const auto [inst, tour] = Generate(11, seed);
    const Outcome dp = Invoke({"find-move", "--k", "4", "--mode", "dp", "--in",
                           inst, "--tour", tour});
    const Outcome naive = Invoke({"find-move", "--k", "4", "--mode", "naive",
                              "--in", inst, "--tour", tour});
    ASSERT_NE(dp.code, kExitError) << dp.err;
    ASSERT_NE(naive.code, kExitError) << naive.err;
    const json a = json::parse(dp.out);
    const json b = json::parse(naive.out);
    EXPECT_EQ(a["gain"], b["gain"]);
    EXPECT_EQ(a["improving"], b["improving"]);
    EXPECT_EQ(dp.code, a["improving"].get<bool>() ? kExitImproving
                                                  : kExitNoImprovement);
    EXPECT_EQ(a["alpha"], "2/3");
    EXPECT_EQ(a["k"], 4);
  }
}

TEST_F(CliTest, ImprovingAndLocallyOptimalExitCodes) {
  const auto [inst, tour] = Generate(10, 7);
  const std::string final_tour = Path("final.json");
  const Outcome search = Invoke({"local-search", "--k", "3", "--in", inst,
                             "--tour", tour, "--out-tour", final_tour});
  ASSERT_EQ(search.code, kExitImproving) << search.err;
  const json report = json::parse(search.out);
  EXPECT_LT(report["final_weight"].get<int64_t>(),
            report["initial_weight"].get<int64_t>());

  const Outcome first = Invoke({"find-move", "--k", "3", "--in", inst, "--tour",
                            tour});
  EXPECT_EQ(first.code, kExitImproving);
  const Outcome again = Invoke({"find-move", "--k", "3", "--in", inst, "--tour",
                            final_tour});
  EXPECT_EQ(again.code, kExitNoImprovement);
  EXPECT_FALSE(json::parse(again.out)["improving"].get<bool>());
}

TEST_F(CliTest, LocalSearchWithZeroSteps) {
  const auto [inst, tour] = Generate(10, 8);
  const std::string final_tour = Path("final.json");
  const Outcome r = Invoke({"local-search", "--k", "2", "--in", inst, "--tour",
                        tour, "--max-steps", "0", "--out-tour", final_tour});
  ASSERT_EQ(r.code, 0) << r.err;
  const json report = json::parse(r.out);
  EXPECT_EQ(report["steps"], 0);
  EXPECT_EQ(report["initial_weight"], report["final_weight"]);
  EXPECT_EQ(json::parse(Slurp(final_tour)), json::parse(Slurp(tour)));
}

TEST_F(CliTest, OutFileReceivesTheReport) {
  const auto [inst, tour] = Generate(9, 9);
  const std::string report = Path("report.json");
  const Outcome r = Invoke({"find-move", "--k", "2", "--in", inst, "--tour", tour,
                        "--out", report});
  ASSERT_NE(r.code, kExitError) << r.err;
  EXPECT_TRUE(r.out.empty());
  const json j = json::parse(Slurp(report));
  EXPECT_TRUE(j.contains("move"));
  EXPECT_EQ(j["policy"], "best");
}

TEST_F(CliTest, CkReport) {
  const Outcome r = Invoke({"ck", "--k", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["c"], "11/3");
  EXPECT_EQ(j["alpha"], "2/3");
  EXPECT_EQ(j["valid_patterns"], 384);
  EXPECT_EQ(Invoke({"ck", "--k", "9"}).code, kExitError);

  const Outcome per = Invoke({"ck", "--k", "3", "--per-pattern"});
  ASSERT_EQ(per.code, 0);
  EXPECT_EQ(json::parse(per.out)["per_pattern"].size(), 8u);
}

TEST_F(CliTest, PatternCounts) {
  const Outcome r = Invoke({"patterns", "--k", "3", "--list"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["matchings"], 15);
  EXPECT_EQ(j["valid"], 8);
  EXPECT_EQ(j["patterns"].size(), 8u);
}

TEST_F(CliTest, GenIsDeterministic) {
  const auto [a_inst, a_tour] = Generate(12, 5);
  const std::string b_inst = Path("other.json");
  const std::string b_tour = Path("other_tour.json");
  ASSERT_EQ(Invoke({"gen", "--type", "random", "--n", "12", "--seed", "5",
                    "--wmax", "100", "--out-instance", b_inst, "--out-tour",
                    b_tour})
                .code,
            0);
  EXPECT_EQ(Slurp(a_inst), Slurp(b_inst));
  EXPECT_EQ(Slurp(a_tour), Slurp(b_tour));
}

TEST_F(CliTest, NegativeTriangleReduction) {
  const std::string inst = Path("red.json");
  const std::string tour = Path("red_tour.json");
  const Outcome gen = Invoke({"gen", "--type", "neg-triangle", "--weights",
                          "1,-3,1", "--out-instance", inst, "--out-tour",
                          tour});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const json summary = json::parse(gen.out);
  EXPECT_EQ(summary["vertices"], 12);
  EXPECT_TRUE(summary["negative_triangle"].get<bool>());
  const Outcome naive = Invoke({"oracle", "best-move", "--k", "4", "--in", inst,
                            "--tour", tour});
  EXPECT_EQ(naive.code, kExitImproving) << naive.err;
  const Outcome dp = Invoke({"find-move", "--k", "4", "--in", inst, "--tour",
                         tour});
  EXPECT_EQ(dp.code, kExitImproving) << dp.err;
  EXPECT_EQ(json::parse(dp.out)["gain"], json::parse(naive.out)["gain"]);

  // |w| large enough to overflow the big-M constants.
  EXPECT_EQ(Invoke({"gen", "--type", "neg-triangle", "--weights",
                    "1,-4000000000000000000,1", "--out-instance", inst,
                    "--out-tour", tour})
                .code,
            kExitError);
  EXPECT_EQ(Invoke({"gen", "--type", "neg-triangle", "--weights", "1,2",
                    "--out-instance", inst, "--out-tour", tour})
                .code,
            kExitError);
}

TEST_F(CliTest, OracleSubcommands) {
  const Outcome tw = Invoke({"oracle", "treewidth", "--n", "5", "--edges",
                         "1-2,2-3,3-4,4-5,5-1"});
  ASSERT_EQ(tw.code, 0) << tw.err;
  EXPECT_EQ(json::parse(tw.out)["treewidth"], 2);
  EXPECT_EQ(json::parse(tw.out)["bruteforce"], 2);
  EXPECT_EQ(Invoke({"oracle", "treewidth", "--n", "3", "--edges", "1-4"}).code,
            kExitError);

  const Outcome tri = Invoke({"oracle", "neg-triangle", "--weights", "1,-3,1"});
  ASSERT_EQ(tri.code, 0) << tri.err;
  EXPECT_EQ(json::parse(tri.out)["triangle"], json::array({1, 2, 3}));
  const Outcome none = Invoke({"oracle", "neg-triangle", "--weights", "1,1,1"});
  EXPECT_FALSE(json::parse(none.out)["negative_triangle"].get<bool>());
}

TEST_F(CliTest, BenchCsv) {
  const std::string csv = Path("bench.csv");
  const Outcome r = Invoke({"bench", "--k", "3", "--n", "8,10", "--repeats", "1",
                        "--out", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> lines =
      absl::StrSplit(Slurp(csv), '\n', absl::SkipEmpty());
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "k,n,alpha,mode,wall_ms,gain");
  // dp and naive rows of the same size report the same gain.
  for (size_t row = 1; row + 1 < lines.size(); row += 2) {
    std::vector<std::string> dp = absl::StrSplit(lines[row], ',');
    std::vector<std::string> naive = absl::StrSplit(lines[row + 1], ',');
    ASSERT_EQ(dp.size(), 6u);
    EXPECT_EQ(dp[1], naive[1]);
    EXPECT_EQ(dp[5], naive[5]);
  }
}

TEST_F(CliTest, ThreadsFromEnvironment) {
  const auto [inst, tour] = Generate(10, 4);
  const Outcome serial = Invoke({"find-move", "--k", "3", "--in", inst, "--tour",
                             tour});
  setenv("KOPT_THREADS", "3", 1);
  const Outcome parallel = Invoke({"find-move", "--k", "3", "--in", inst,
                               "--tour", tour});
  unsetenv("KOPT_THREADS");
  ASSERT_NE(parallel.code, kExitError) << parallel.err;
  EXPECT_EQ(json::parse(serial.out), json::parse(parallel.out));
}

}  // namespace
}  // namespace kopt
