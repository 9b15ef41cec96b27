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

#include <random>

#include <gtest/gtest.h>

#include "groundml/metric.hpp"
#include "oracles.hpp"

namespace groundml {
namespace {

Matrix random_matrix(std::mt19937_64& rng, Index r, Index c) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) m(i, j) = n(rng);
  }
  return m;
}

TEST(Metric, IdentityMatchesEuclidean) {
  std::mt19937_64 rng(1);
  const auto id = LowRankMahalanobis::identity(4);
  for (int t = 0; t < 20; ++t) {
    const Vector x = random_matrix(rng, 4, 1);
    const Vector y = random_matrix(rng, 4, 1);
    EXPECT_NEAR(id.distance(x, y), (x - y).norm(), 1e-14);
    EXPECT_NEAR(baseline_distance(BaselineMetric::euclidean, x, y), (x - y).norm(), 1e-14);
    EXPECT_NEAR(baseline_distance(BaselineMetric::manhattan, x, y), (x - y).cwiseAbs().sum(), 1e-14);
  }
}

TEST(Metric, PseudometricAxioms) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const LowRankMahalanobis w(random_matrix(rng, 2, 5));
    const Vector x = random_matrix(rng, 5, 1);
    const Vector y = random_matrix(rng, 5, 1);
    const Vector z = random_matrix(rng, 5, 1);
    EXPECT_GE(w.distance(x, y), 0.0);
    EXPECT_EQ(w.distance(x, x), 0.0);
    EXPECT_DOUBLE_EQ(w.distance(x, y), w.distance(y, x));
    EXPECT_LE(w.distance(x, z), w.distance(x, y) + w.distance(y, z) + 1e-12);
  }
}

TEST(Metric, LowRankHasNontrivialNullSpace) {
  Matrix w(1, 3);
  w << 1, 0, 0;
  const LowRankMahalanobis m(w);
  Vector x(3), y(3);
  x << 2, 5, -1;
  y << 2, -7, 4;
  EXPECT_EQ(m.distance(x, y), 0.0);
  EXPECT_THROW(m.gradient(x, y), NondifferentiablePoint);
}

TEST(Metric, ConstructionRejectsBadShapes) {
  EXPECT_THROW(LowRankMahalanobis(Matrix(3, 2)), InvalidArgument);
  EXPECT_THROW(LowRankMahalanobis(Matrix(0, 2)), InvalidArgument);
  Matrix bad = Matrix::Zero(1, 2);
  bad(0, 0) = std::nan("");
  EXPECT_THROW(LowRankMahalanobis{bad}, InvalidArgument);
  const auto m = LowRankMahalanobis::identity_truncated(2, 4);
  EXPECT_THROW(m.distance(Vector::Zero(3), Vector::Zero(3)), InvalidArgument);
}

TEST(Metric, GradientMatchesCentralDifferences) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const Matrix w = random_matrix(rng, 3, 6);
    const Vector x = random_matrix(rng, 6, 1);
    const Vector y = random_matrix(rng, 6, 1);
    const Matrix analytic = LowRankMahalanobis(w).gradient(x, y);
    const Matrix numeric = testing::central_difference(
        [&](const Matrix& p) { return (p * (x - y)).norm(); }, w, 1e-6);
    EXPECT_LT(testing::relative_error(analytic, numeric), 1e-7);
  }
}

TEST(Metric, ReconstructionIsSymmetricPsd) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const LowRankMahalanobis w(random_matrix(rng, 2, 7));
    const auto m = reconstruct_mahalanobis(w);
    EXPECT_TRUE(m.is_symmetric());
    EXPECT_TRUE(m.is_psd());
    const Vector x = random_matrix(rng, 7, 1);
    const Vector y = random_matrix(rng, 7, 1);
    const Vector d = x - y;
    EXPECT_NEAR(std::sqrt(d.dot(m.m * d)), w.distance(x, y), 1e-10);
  }
  MahalanobisMatrix neg{-Matrix::Identity(2, 2)};
  EXPECT_FALSE(neg.is_psd());
}

TEST(Metric, FeatureImportanceIsColumnSquaredNorm) {
  Matrix w(2, 4);
  w << 1, 0, 3, 0,
       1, 0, 0, 2;
  const auto ranking = feature_importance(LowRankMahalanobis(w));
  ASSERT_EQ(ranking.size(), 4u);
  EXPECT_EQ(ranking[0].feature, 2);
  EXPECT_DOUBLE_EQ(ranking[0].importance, 9.0);
  EXPECT_EQ(ranking[1].feature, 3);
  EXPECT_EQ(ranking[2].feature, 0);
  EXPECT_EQ(ranking[2].name, "f0");
  EXPECT_EQ(ranking[3].feature, 1);
  EXPECT_DOUBLE_EQ(ranking[3].importance, 0.0);
  const Vector diag = reconstruct_mahalanobis(LowRankMahalanobis(w)).m.diagonal();
  for (const auto& r : ranking) EXPECT_DOUBLE_EQ(r.importance, diag(r.feature));

  const auto named = feature_importance(LowRankMahalanobis(w), std::vector<std::string>{"a", "b", "c", "d"});
  EXPECT_EQ(named[0].name, "c");
  EXPECT_THROW(feature_importance(LowRankMahalanobis(w), std::vector<std::string>{"a"}), InvalidArgument);
}

TEST(Metric, ImportanceTiesKeepFeatureOrder) {
  const auto ranking = feature_importance(LowRankMahalanobis::identity(3));
  EXPECT_EQ(ranking[0].feature, 0);
  EXPECT_EQ(ranking[1].feature, 1);
  EXPECT_EQ(ranking[2].feature, 2);
}

TEST(Metric, CosineDistance) {
  Vector x(2), y(2), z(2);
  x << 1, 0;
  y << 0, 3;
  z << -2, 0;
  EXPECT_NEAR(baseline_distance(BaselineMetric::cosine, x, y), 1.0, 1e-15);
  EXPECT_NEAR(baseline_distance(BaselineMetric::cosine, x, z), 2.0, 1e-15);
  EXPECT_NEAR(baseline_distance(BaselineMetric::cosine, x, x), 0.0, 1e-15);
  EXPECT_THROW(baseline_distance(BaselineMetric::cosine, x, Vector::Zero(2)), InvalidArgument);
}

TEST(Metric, ParseBaselineNames) {
  EXPECT_EQ(parse_baseline_metric("euclidean"), BaselineMetric::euclidean);
  EXPECT_EQ(parse_baseline_metric("cosine"), BaselineMetric::cosine);
  EXPECT_EQ(to_string(BaselineMetric::manhattan), "manhattan");
  EXPECT_THROW(parse_baseline_metric("chebyshev"), InvalidArgument);
}

TEST(Blend, ConvexCombination) {
  Matrix a(2, 2), b(2, 2);
  a << 0, 2, 2, 0;
  b << 0, 4, 4, 0;
  const std::vector<Matrix> ms{a, b};
  const std::vector<double> w{0.25, 0.75};
  const Matrix out = blend_distance_matrices(ms, w);
  EXPECT_DOUBLE_EQ(out(0, 1), 3.5);
  EXPECT_DOUBLE_EQ(out(1, 1), 0.0);
  const std::vector<double> bad{0.5, 0.6};
  EXPECT_THROW(blend_distance_matrices(ms, bad), InvalidArgument);
  const std::vector<double> negative{1.5, -0.5};
  EXPECT_THROW(blend_distance_matrices(ms, negative), InvalidArgument);
  const std::vector<Matrix> mismatched{a, Matrix::Zero(3, 3)};
  EXPECT_THROW(blend_distance_matrices(mismatched, w), InvalidArgument);
}

}  // namespace
}  // namespace groundml
