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
#include "groundml/ot.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "network_simplex.hpp"

namespace groundml {

Matrix cost_matrix(const GroundMetric& metric, const EmpiricalDistribution& x,
                   const EmpiricalDistribution& y) {
  if (x.dimension() != y.dimension()) {
    throw InvalidArgument("dimension mismatch between '" + x.id + "' and '" + y.id + "'");
  }
  if (static_cast<double>(x.size()) * static_cast<double>(y.size()) > kMaxTransportEntries) {
    throw InvalidArgument("transport problem too large");
  }
  Matrix costs(x.size(), y.size());
  if (const auto* params = std::get_if<LowRankMahalanobis>(&metric)) {
    const RowMatrix px = params->project(x.points);
    const RowMatrix py = params->project(y.points);
    for (Index b = 0; b < y.size(); ++b) {
      for (Index a = 0; a < x.size(); ++a) costs(a, b) = (px.row(a) - py.row(b)).norm();
    }
    return costs;
  }
  const auto kind = std::get<BaselineMetric>(metric);
  for (Index b = 0; b < y.size(); ++b) {
    for (Index a = 0; a < x.size(); ++a) {
      costs(a, b) = baseline_distance(kind, x.points.row(a).transpose(), y.points.row(b).transpose());
    }
  }
  return costs;
}

namespace {

void validate_marginal(const Vector& w, const char* name) {
  if (w.size() == 0) throw InvalidArgument(std::string("empty marginal ") + name);
  if (!w.allFinite() || (w.array() < 0.0).any()) {
    throw InvalidArgument(std::string("marginal ") + name + " has negative or non-finite entries");
  }
  if (std::abs(w.sum() - 1.0) > 1e-12) {
    throw InvalidArgument(std::string("marginal ") + name + " does not sum to 1");
  }
}

}  // namespace

TransportPlan emd(const Matrix& costs, const Vector& a, const Vector& b) {
  validate_marginal(a, "a");
  validate_marginal(b, "b");
  if (costs.rows() != a.size() || costs.cols() != b.size()) {
    throw InvalidArgument("cost matrix shape does not match the marginals");
  }
  if (static_cast<double>(costs.rows()) * static_cast<double>(costs.cols()) > kMaxTransportEntries) {
    throw InvalidArgument("transport problem too large");
  }
  if (!costs.allFinite()) throw InvalidArgument("non-finite cost");

  // Rescale b so both sides carry the same floating-point mass.
  Vector demand = b * (a.sum() / b.sum());
  auto solution = detail::solve_transport(costs, a, demand);

  TransportPlan plan;
  plan.coupling = std::move(solution.flow);
  plan.total_cost = solution.cost;
  plan.source_potential = std::move(solution.source_potential);
  plan.target_potential = std::move(solution.target_potential);
  plan.iterations = solution.iterations;
  return plan;
}

void check_plan(const TransportPlan& plan, const Matrix& costs, const Vector& a, const Vector& b,
                double tol) {
  const Matrix& p = plan.coupling;
  if (p.rows() != a.size() || p.cols() != b.size()) throw std::logic_error("coupling shape mismatch");
  if ((p.array() < 0.0).any()) throw std::logic_error("coupling has negative entries");
  const double row_err = (p.rowwise().sum() - a).cwiseAbs().maxCoeff();
  if (row_err > tol) {
    std::ostringstream os;
    os << "row marginals off by " << row_err;
    throw std::logic_error(os.str());
  }
  const double col_err = (p.colwise().sum().transpose() - b).cwiseAbs().maxCoeff();
  if (col_err > tol) {
    std::ostringstream os;
    os << "column marginals off by " << col_err;
    throw std::logic_error(os.str());
  }
  const double cost = (p.array() * costs.array()).sum();
  if (std::abs(cost - plan.total_cost) > tol) throw std::logic_error("total cost inconsistent with coupling");
}

bool satisfies_complementary_slackness(const TransportPlan& plan, const Matrix& costs, double tol) {
  for (Index j = 0; j < costs.cols(); ++j) {
    for (Index i = 0; i < costs.rows(); ++i) {
      const double reduced = costs(i, j) - plan.source_potential(i) - plan.target_potential(j);
      if (reduced < -tol) return false;
      if (plan.coupling(i, j) > 0.0 && std::abs(reduced) > tol) return false;
    }
  }
  return true;
}

WassersteinResult wasserstein(const GroundMetric& metric, const EmpiricalDistribution& x,
                              const EmpiricalDistribution& y) {
  const Matrix costs = cost_matrix(metric, x, y);
  WassersteinResult out;
  out.plan = emd(costs, x.weights, y.weights);
  out.value = out.plan.total_cost;
  return out;
}

ProjectedDistribution project(const LowRankMahalanobis& params, const EmpiricalDistribution& dist) {
  return ProjectedDistribution{&dist, params.project(dist.points)};
}

namespace {

Matrix projected_costs(const RowMatrix& px, const RowMatrix& py) {
  if (static_cast<double>(px.rows()) * static_cast<double>(py.rows()) > kMaxTransportEntries) {
    throw InvalidArgument("transport problem too large");
  }
  // ||p - q||^2 = |p|^2 + |q|^2 - 2 p.q is cheaper but loses precision for
  // nearby points; the direct form keeps zero distances exact.
  Matrix costs(px.rows(), py.rows());
  for (Index b = 0; b < py.rows(); ++b) {
    for (Index a = 0; a < px.rows(); ++a) costs(a, b) = (px.row(a) - py.row(b)).norm();
  }
  return costs;
}

}  // namespace

double wasserstein_value(const ProjectedDistribution& x, const ProjectedDistribution& y) {
  const Matrix costs = projected_costs(x.projected, y.projected);
  return emd(costs, x.source->weights, y.source->weights).total_cost;
}

WassersteinGradient wasserstein_gradient(const ProjectedDistribution& x,
                                         const ProjectedDistribution& y) {
  if (x.source->dimension() != y.source->dimension()) {
    throw InvalidArgument("dimension mismatch between '" + x.source->id + "' and '" + y.source->id + "'");
  }
  const Matrix costs = projected_costs(x.projected, y.projected);
  const TransportPlan plan = emd(costs, x.source->weights, y.source->weights);

  // grad = sum_ab c_ab (p_a - q_b)(x_a - y_b)^T with c_ab = pi_ab / d_ab,
  // expanded into four dense products.
  Matrix scaled = Matrix::Zero(costs.rows(), costs.cols());
  for (Index b = 0; b < costs.cols(); ++b) {
    for (Index a = 0; a < costs.rows(); ++a) {
      const double mass = plan.coupling(a, b);
      if (mass > 0.0 && costs(a, b) > 0.0) scaled(a, b) = mass / costs(a, b);
    }
  }
  const Vector row_sums = scaled.rowwise().sum();
  const Vector col_sums = scaled.colwise().sum().transpose();
  const RowMatrix& p = x.projected;
  const RowMatrix& q = y.projected;
  const RowMatrix& xs = x.source->points;
  const RowMatrix& ys = y.source->points;

  Matrix grad = p.transpose() * row_sums.asDiagonal() * xs;
  grad.noalias() -= (p.transpose() * scaled) * ys;
  grad.noalias() -= (q.transpose() * scaled.transpose()) * xs;
  grad.noalias() += q.transpose() * col_sums.asDiagonal() * ys;
  return WassersteinGradient{plan.total_cost, std::move(grad)};
}

WassersteinGradient wasserstein_gradient(const LowRankMahalanobis& params,
                                         const EmpiricalDistribution& x,
                                         const EmpiricalDistribution& y) {
  if (x.dimension() != params.dimension() || y.dimension() != params.dimension()) {
    throw InvalidArgument("dimension mismatch between metric and distributions");
  }
  return wasserstein_gradient(project(params, x), project(params, y));
}

}  // namespace groundml
