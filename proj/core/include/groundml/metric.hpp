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
#ifndef GROUNDML_METRIC_HPP_
#define GROUNDML_METRIC_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "groundml/types.hpp"

namespace groundml {

// Thrown by gradient evaluations at d(x, y) == 0, where the norm has a kink.
class NondifferentiablePoint : public std::domain_error {
 public:
  NondifferentiablePoint() : std::domain_error("nondifferentiable point: d(x, y) == 0") {}
};

// Low-rank Mahalanobis ground metric d(x, y) = ||W (x - y)|| with W of shape
// k x D. The implied matrix M = W^T W is PSD by construction.
class LowRankMahalanobis {
 public:
  LowRankMahalanobis() = default;
  explicit LowRankMahalanobis(Matrix w);

  static LowRankMahalanobis identity(Index dimension);
  // First `rank` rows of the D x D identity.
  static LowRankMahalanobis identity_truncated(Index rank, Index dimension);
  static LowRankMahalanobis zero(Index rank, Index dimension);

  const Matrix& weights() const { return w_; }
  Index rank() const { return w_.rows(); }
  Index dimension() const { return w_.cols(); }

  double distance(const PointRef& x, const PointRef& y) const;

  // d/dW of ||W (x - y)||: row r is (W_r . delta) delta^T / ||W delta||.
  // Throws NondifferentiablePoint when the distance is exactly zero.
  Matrix gradient(const PointRef& x, const PointRef& y) const;

  // Maps points (rows) into the k-dimensional learned subspace.
  RowMatrix project(const RowMatrix& points) const;

 private:
  Matrix w_;
};

enum class BaselineMetric { euclidean, manhattan, cosine };

std::string_view to_string(BaselineMetric kind);
BaselineMetric parse_baseline_metric(std::string_view name);

// Either a fixed baseline or a learned low-rank Mahalanobis metric.
using GroundMetric = std::variant<BaselineMetric, LowRankMahalanobis>;

// l2, l1 or 1 - cos(x, y). Cosine throws InvalidArgument on a zero vector.
double baseline_distance(BaselineMetric kind, const PointRef& x, const PointRef& y);
double ground_distance(const GroundMetric& metric, const PointRef& x, const PointRef& y);

struct MahalanobisMatrix {
  Matrix m;  // D x D

  bool is_symmetric(double tol = 1e-9) const;
  bool is_psd(double tol = 1e-9) const;
};

MahalanobisMatrix reconstruct_mahalanobis(const LowRankMahalanobis& params);

struct FeatureImportance {
  Index feature = 0;
  std::string name;
  double importance = 0.0;
};

// Diagonal of W^T W, sorted descending with ties kept in feature order.
// Names default to f0..f{D-1}; a name list of the wrong length is rejected.
std::vector<FeatureImportance> feature_importance(
    const LowRankMahalanobis& params,
    const std::optional<std::vector<std::string>>& feature_names = std::nullopt);

// Entrywise convex combination of square, symmetric, zero-diagonal distance
// matrices. Weights must be nonnegative and sum to 1 within 1e-9.
Matrix blend_distance_matrices(std::span<const Matrix> matrices, std::span<const double> weights);

}  // namespace groundml

#endif  // GROUNDML_METRIC_HPP_
