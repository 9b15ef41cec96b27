// Copyright 2026 The groundml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "groundml/io.hpp"

namespace groundml {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("groundml_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv(cli::kThreadsEnv);
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv(cli::kThreadsEnv);
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  // Small 2D dataset shared by the command tests.
  fs::path small_dataset() {
    const auto d = dir_ / "data";
    EXPECT_EQ(run({"synth", "--seed", "3", "--dists-per-class", "5", "--points", "12", "--out-dir", d.string()}), 0)
        << err_.str();
    return d / "dataset.csv";
  }

  std::vector<std::string> fast_train() {
    return {"--epochs", "2", "--rank", "2", "--neighbors", "2", "--alpha", "1", "--lambda", "0.1"};
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

std::vector<std::string> operator+(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST_F(CliTest, SynthWritesHeaderAndIsReproducible) {
  ASSERT_EQ(run({"synth", "--dim", "2", "--classes", "3", "--seed", "7", "--out-dir", (dir_ / "a").string()}), 0);
  ASSERT_EQ(run({"synth", "--dim", "2", "--classes", "3", "--seed", "7", "--out-dir", (dir_ / "b").string()}), 0);
  const auto a = read(dir_ / "a" / "dataset.csv");
  EXPECT_EQ(a.substr(0, a.find('\n')), "dist_id,label,f0,f1");
  EXPECT_EQ(a, read(dir_ / "b" / "dataset.csv"));
  const auto manifest = read(dir_ / "a" / cli::kManifestName);
  EXPECT_NE(manifest.find(hash_file(dir_ / "a" / "dataset.csv")), std::string::npos);
  EXPECT_NE(manifest.find("seed=7"), std::string::npos);
  ASSERT_EQ(run({"--config", (dir_ / "a" / cli::kManifestName).string(), "synth", "--out-dir", (dir_ / "c").string()}),
            0)
      << err_.str();
  EXPECT_EQ(a, read(dir_ / "c" / "dataset.csv"));
}

TEST_F(CliTest, SynthRejectsDimensionOne) {
  EXPECT_EQ(run({"synth", "--dim", "1", "--out-dir", dir_.string()}), 2);
  EXPECT_NE(err_.str().find("dimension"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "dataset.csv"));
}

TEST_F(CliTest, TrainProducesThreeFiles) {
  const auto data = small_dataset();
  const auto out = dir_ / "run";
  ASSERT_EQ(run(std::vector<std::string>{"train", "--data", data.string(), "--out-dir", out.string()} + fast_train()), 0)
      << err_.str();
  EXPECT_TRUE(fs::exists(out / "params.csv"));
  EXPECT_TRUE(fs::exists(out / "loss.csv"));
  EXPECT_TRUE(fs::exists(out / cli::kManifestName));
  EXPECT_EQ(count_lines(read(out / "loss.csv")), 4u);
  EXPECT_EQ(load_params(out / "params.csv").params.rank(), 2);
}

TEST_F(CliTest, TrainWithDefaultsCapsRankAtDimension) {
  const auto data = small_dataset();
  const auto out = dir_ / "run";
  ASSERT_EQ(run({"train", "--data", data.string(), "--epochs", "1", "--out-dir", out.string()}), 0) << err_.str();
  EXPECT_EQ(load_params(out / "params.csv").params.rank(), 2);
}

TEST_F(CliTest, TrainRejectsNegativeLambda) {
  const auto data = small_dataset();
  EXPECT_EQ(run({"train", "--data", data.string(), "--lambda", "-1", "--out-dir", dir_.string()}), 2);
  EXPECT_NE(err_.str().find("lambda"), std::string::npos);
}

TEST_F(CliTest, MissingInputNamesThePath) {
  const auto missing = (dir_ / "nowhere.csv").string();
  EXPECT_NE(run({"train", "--data", missing, "--out-dir", dir_.string()}), 0);
  EXPECT_NE(err_.str().find(missing), std::string::npos);
  EXPECT_NE(run({"eval-classify", "--data", missing, "--out-dir", dir_.string()}), 0);
  EXPECT_NE(err_.str().find(missing), std::string::npos);
  EXPECT_NE(run({"importance", "--params", missing, "--out-dir", dir_.string()}), 0);
  EXPECT_NE(err_.str().find(missing), std::string::npos);
}

TEST_F(CliTest, ConfigFileWithFlagOverrides) {
  const auto data = small_dataset();
  const auto cfg = dir_ / "run.ini";
  std::ofstream(cfg) << "[train]\ndata=\"" << data.string() << "\"\nepochs=3\nrank=1\nneighbors=2\nalpha=1\n";
  ASSERT_EQ(run({"--config", cfg.string(), "train", "--out-dir", (dir_ / "a").string()}), 0) << err_.str();
  EXPECT_EQ(count_lines(read(dir_ / "a" / "loss.csv")), 5u);
  EXPECT_EQ(load_params(dir_ / "a" / "params.csv").params.rank(), 1);
  ASSERT_EQ(run({"--config", cfg.string(), "train", "--epochs", "1", "--out-dir", (dir_ / "b").string()}), 0);
  EXPECT_EQ(count_lines(read(dir_ / "b" / "loss.csv")), 3u);
}

TEST_F(CliTest, ThreadsFromEnvironmentAndFlag) {
  const auto data = small_dataset();
  setenv(cli::kThreadsEnv, "3", 1);
  ASSERT_EQ(run({"eval-classify", "--data", data.string(), "--method", "euclidean", "--splits", "2", "--out-dir",
                 (dir_ / "a").string()}),
            0);
  EXPECT_NE(read(dir_ / "a" / cli::kManifestName).find("threads=\"3\""), std::string::npos);
  ASSERT_EQ(run({"eval-classify", "--threads", "2", "--data", data.string(), "--method", "euclidean", "--splits", "2",
                 "--out-dir", (dir_ / "b").string()}),
            0);
  EXPECT_NE(read(dir_ / "b" / cli::kManifestName).find("threads=\"2\""), std::string::npos);
  EXPECT_EQ(read(dir_ / "a" / "benchmark.csv"), read(dir_ / "b" / "benchmark.csv"));
}

TEST_F(CliTest, ManifestReproducesTraining) {
  const auto data = small_dataset();
  const auto first = dir_ / "first";
  ASSERT_EQ(run(std::vector<std::string>{"--seed", "11", "train", "--data", data.string(), "--out-dir", first.string()} +
                fast_train()),
            0);
  const auto second = dir_ / "second";
  ASSERT_EQ(run({"--config", (first / cli::kManifestName).string(), "train", "--out-dir", second.string()}), 0)
      << err_.str();
  EXPECT_EQ(hash_file(first / "params.csv"), hash_file(second / "params.csv"));
  EXPECT_EQ(read(first / "loss.csv"), read(second / "loss.csv"));
}

TEST_F(CliTest, EvalClassifyHappyBadAndDeterministic) {
  const auto data = small_dataset();
  const std::vector<std::string> args{"eval-classify", "--data", data.string(), "--method", "euclidean", "--splits", "3"};
  ASSERT_EQ(run(args + std::vector<std::string>{"--out-dir", (dir_ / "a").string()}), 0);
  ASSERT_EQ(run(args + std::vector<std::string>{"--out-dir", (dir_ / "b").string()}), 0);
  const auto bench = read(dir_ / "a" / "benchmark.csv");
  EXPECT_EQ(bench, read(dir_ / "b" / "benchmark.csv"));
  EXPECT_EQ(bench.substr(0, 15), "split,accuracy\n");
  EXPECT_NE(bench.find("\nmean,"), std::string::npos);
  EXPECT_EQ(run({"eval-classify", "--data", data.string(), "--method", "chebyshev", "--out-dir", dir_.string()}), 2);
  EXPECT_EQ(run({"eval-classify", "--data", data.string(), "--splits", "0", "--out-dir", dir_.string()}), 2);
}

TEST_F(CliTest, EvalClusterHappyBadAndDeterministic) {
  const auto data = small_dataset();
  const std::vector<std::string> args{"eval-cluster", "--data", data.string(), "--metric", "euclidean"};
  ASSERT_EQ(run(args + std::vector<std::string>{"--out-dir", (dir_ / "a").string()}), 0) << err_.str();
  ASSERT_EQ(run(args + std::vector<std::string>{"--out-dir", (dir_ / "b").string()}), 0);
  const auto clusters = read(dir_ / "a" / "clusters.csv");
  EXPECT_EQ(clusters, read(dir_ / "b" / "clusters.csv"));
  EXPECT_EQ(clusters.substr(0, 11), "id,cluster\n");
  EXPECT_EQ(count_lines(clusters), 16u);
  EXPECT_TRUE(fs::exists(dir_ / "a" / "scores.csv"));
  EXPECT_EQ(run({"eval-cluster", "--out-dir", dir_.string()}), 2);
  EXPECT_EQ(run(args + std::vector<std::string>{"--linkage", "ward", "--out-dir", dir_.string()}), 2);
}

TEST_F(CliTest, ClusterFromExportedDistances) {
  const auto data = small_dataset();
  ASSERT_EQ(run({"distances", "--data", data.string(), "--out-dir", (dir_ / "d").string()}), 0) << err_.str();
  const auto dm = load_distance_matrix(dir_ / "d" / "distances.csv");
  EXPECT_EQ(dm.size(), 15u);
  ASSERT_EQ(run({"eval-cluster", "--distances", (dir_ / "d" / "distances.csv").string(), "--clusters", "3",
                 "--out-dir", (dir_ / "c").string()}),
            0)
      << err_.str();
  EXPECT_FALSE(fs::exists(dir_ / "c" / "scores.csv"));
  EXPECT_EQ(run({"eval-cluster", "--distances", (dir_ / "d" / "distances.csv").string(), "--out-dir",
                 (dir_ / "e").string()}),
            2);
}

TEST_F(CliTest, PointLevelDistancesWithAccuracyFilter) {
  const auto data = small_dataset();
  ASSERT_EQ(run({"distances", "--data", data.string(), "--level", "point", "--out-dir", (dir_ / "all").string()}), 0);
  EXPECT_EQ(load_distance_matrix(dir_ / "all" / "distances.csv").size(), 15u * 12u);
  ASSERT_EQ(run({"distances", "--data", data.string(), "--level", "point", "--min-accuracy", "0.9", "--splits", "3",
                 "--knn-k", "5", "--out-dir", (dir_ / "kept").string()}),
            0)
      << err_.str();
  EXPECT_LT(load_distance_matrix(dir_ / "kept" / "distances.csv").size(), 15u * 12u);
  EXPECT_EQ(run({"distances", "--data", data.string(), "--min-accuracy", "0.9", "--out-dir", dir_.string()}), 2);
}

TEST_F(CliTest, ImportanceOfIdentityAndZeroParams) {
  write_params(LowRankMahalanobis::identity(3), {"a", "b", "c"}, dir_ / "id.csv");
  ASSERT_EQ(run({"importance", "--params", (dir_ / "id.csv").string(), "--out-dir", (dir_ / "i").string()}), 0);
  EXPECT_EQ(read(dir_ / "i" / "importance.csv"), "rank,feature,importance\n1,a,1\n2,b,1\n3,c,1\n");
  write_params(LowRankMahalanobis::zero(1, 2), {"a", "b"}, dir_ / "zero.csv");
  ASSERT_EQ(run({"importance", "--params", (dir_ / "zero.csv").string(), "--out-dir", (dir_ / "z").string()}), 0);
  EXPECT_EQ(read(dir_ / "z" / "importance.csv"), "rank,feature,importance\n1,a,0\n2,b,0\n");
}

TEST_F(CliTest, GridHasOneRowPerCellAndMatchesValidationEval) {
  const auto data = small_dataset();
  ASSERT_EQ(run(std::vector<std::string>{"grid", "--data", data.string(), "--alphas", "0.5,1", "--lambdas", "0,0.1,1",
                                         "--splits", "2", "--out-dir", (dir_ / "g").string()} +
                std::vector<std::string>{"--epochs", "1", "--rank", "1", "--neighbors", "2"}),
            0)
      << err_.str();
  const auto grid = read(dir_ / "g" / "grid.csv");
  EXPECT_EQ(grid.substr(0, grid.find('\n')), "alpha,lambda,val_accuracy");
  EXPECT_EQ(count_lines(grid), 7u);

  ASSERT_EQ(run({"grid", "--data", data.string(), "--alphas", "1", "--lambdas", "0.1", "--splits", "2", "--epochs", "1",
                 "--rank", "1", "--neighbors", "2", "--out-dir", (dir_ / "one").string()}),
            0);
  ASSERT_EQ(run({"eval-classify", "--data", data.string(), "--method", "ggml", "--score-validation", "--alpha", "1",
                 "--lambda", "0.1", "--splits", "2", "--epochs", "1", "--rank", "1", "--neighbors", "2", "--out-dir",
                 (dir_ / "ev").string()}),
            0);
  const auto one = read(dir_ / "one" / "grid.csv");
  const auto bench = read(dir_ / "ev" / "benchmark.csv");
  const auto cell = one.substr(one.rfind(',') + 1);
  const auto mean_at = bench.find("mean,") + 5;
  EXPECT_EQ(cell, bench.substr(mean_at, bench.find('\n', mean_at) - mean_at + 1));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_NE(run({}), 0);
  EXPECT_NE(run({"frobnicate"}), 0);
  EXPECT_EQ(run({"--help"}), 0);
}

}  // namespace
}  // namespace groundml
