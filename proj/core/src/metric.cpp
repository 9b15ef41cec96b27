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
#include "groundml/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace groundml {

LowRankMahalanobis::LowRankMahalanobis(Matrix w) : w_(std::move(w)) {
  if (w_.rows() < 1 || w_.cols() < 1) throw InvalidArgument("metric parameters must be non-empty");
  if (w_.rows() > w_.cols()) throw InvalidArgument("rank must not exceed the dimension");
  if (!w_.allFinite()) throw InvalidArgument("metric parameters must be finite");
}

LowRankMahalanobis LowRankMahalanobis::identity(Index dimension) {
  return LowRankMahalanobis(Matrix::Identity(dimension, dimension));
}

LowRankMahalanobis LowRankMahalanobis::identity_truncated(Index rank, Index dimension) {
  return LowRankMahalanobis(Matrix::Identity(rank, dimension));
}

LowRankMahalanobis LowRankMahalanobis::zero(Index rank, Index dimension) {
  return LowRankMahalanobis(Matrix::Zero(rank, dimension));
}

namespace {

void require_dims(const PointRef& x, const PointRef& y, Index dimension) {
  if (x.size() != dimension || y.size() != dimension) {
    throw InvalidArgument("dimension mismatch: expected " + std::to_string(dimension) + ", got " +
                          std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
}

}  // namespace

double LowRankMahalanobis::distance(const PointRef& x, const PointRef& y) const {
  require_dims(x, y, dimension());
  return (w_ * (x - y)).norm();
}

Matrix LowRankMahalanobis::gradient(const PointRef& x, const PointRef& y) const {
  require_dims(x, y, dimension());
  const Vector delta = x - y;
  const Vector projected = w_ * delta;
  const double d = projected.norm();
  if (d == 0.0) throw NondifferentiablePoint();
  return (projected / d) * delta.transpose();
}

RowMatrix LowRankMahalanobis::project(const RowMatrix& points) const {
  if (points.cols() != dimension()) throw InvalidArgument("dimension mismatch in projection");
  return points * w_.transpose();
}

std::string_view to_string(BaselineMetric kind) {
  switch (kind) {
    case BaselineMetric::euclidean: return "euclidean";
    case BaselineMetric::manhattan: return "manhattan";
    case BaselineMetric::cosine: return "cosine";
  }
  return "unknown";
}

BaselineMetric parse_baseline_metric(std::string_view name) {
  if (name == "euclidean") return BaselineMetric::euclidean;
  if (name == "manhattan") return BaselineMetric::manhattan;
  if (name == "cosine") return BaselineMetric::cosine;
  throw InvalidArgument("unknown metric '" + std::string(name) + "'");
}

double baseline_distance(BaselineMetric kind, const PointRef& x, const PointRef& y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()));
  }
  switch (kind) {
    case BaselineMetric::euclidean:
      return (x - y).norm();
    case BaselineMetric::manhattan:
      return (x - y).lpNorm<1>();
    case BaselineMetric::cosine: {
      const double nx = x.norm();
      const double ny = y.norm();
      if (nx == 0.0 || ny == 0.0) throw InvalidArgument("cosine distance is undefined for a zero vector");
      // Clamp so rounding never produces a tiny negative distance.
      return std::clamp(1.0 - x.dot(y) / (nx * ny), 0.0, 2.0);
    }
  }
  throw InvalidArgument("unknown metric");
}

double ground_distance(const GroundMetric& metric, const PointRef& x, const PointRef& y) {
  if (const auto* kind = std::get_if<BaselineMetric>(&metric)) return baseline_distance(*kind, x, y);
  return std::get<LowRankMahalanobis>(metric).distance(x, y);
}

bool MahalanobisMatrix::is_symmetric(double tol) const {
  return m.rows() == m.cols() && (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

bool MahalanobisMatrix::is_psd(double tol) const {
  if (!is_symmetric(tol)) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

MahalanobisMatrix reconstruct_mahalanobis(const LowRankMahalanobis& params) {
  const Matrix& w = params.weights();
  return MahalanobisMatrix{w.transpose() * w};
}

std::vector<FeatureImportance> feature_importance(
    const LowRankMahalanobis& params, const std::optional<std::vector<std::string>>& feature_names) {
  const Index dim = params.dimension();
  if (feature_names && static_cast<Index>(feature_names->size()) != dim) {
    throw InvalidArgument("feature name count " + std::to_string(feature_names->size()) +
                          " differs from dimension " + std::to_string(dim));
  }
  // diag(W^T W)_f is the squared norm of column f.
  const Vector diag = params.weights().colwise().squaredNorm().transpose();
  std::vector<FeatureImportance> out(static_cast<std::size_t>(dim));
  for (Index f = 0; f < dim; ++f) {
    auto& entry = out[static_cast<std::size_t>(f)];
    entry.feature = f;
    entry.name = feature_names ? (*feature_names)[static_cast<std::size_t>(f)] : "f" + std::to_string(f);
    entry.importance = diag(f);
  }
  std::stable_sort(out.begin(), out.end(), [](const FeatureImportance& a, const FeatureImportance& b) {
    return a.importance > b.importance;
  });
  return out;
}

Matrix blend_distance_matrices(std::span<const Matrix> matrices, std::span<const double> weights) {
  if (matrices.empty()) throw InvalidArgument("no distance matrices to blend");
  if (matrices.size() != weights.size()) throw InvalidArgument("one weight per matrix is required");
  const Index n = matrices.front().rows();
  double sum = 0.0;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const Matrix& m = matrices[i];
    if (m.rows() != n || m.cols() != n) throw InvalidArgument("distance matrix shape mismatch");
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) throw InvalidArgument("negative blend weight");
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidArgument("blend weights must sum to 1");
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < matrices.size(); ++i) out += weights[i] * matrices[i];
  out.diagonal().setZero();
  return out;
}

}  // namespace groundml
