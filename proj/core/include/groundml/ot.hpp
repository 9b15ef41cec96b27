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
#ifndef GROUNDML_OT_HPP_
#define GROUNDML_OT_HPP_

#include "groundml/dataset.hpp"
#include "groundml/metric.hpp"
#include "groundml/types.hpp"

namespace groundml {

// Largest accepted n * m for a single transport problem.
inline constexpr double kMaxTransportEntries = 1e8;

struct TransportPlan {
  Matrix coupling;  // n x m, rows sum to a, columns sum to b
  double total_cost = 0.0;
  // Dual variables of the transportation LP: cost(i, j) - u_i - v_j >= 0 with
  // equality on the support of the coupling.
  Vector source_potential;
  Vector target_potential;
  long iterations = 0;
};

// Ground-cost matrix costs(a, b) = d(X_a, Y_b).
Matrix cost_matrix(const GroundMetric& metric, const EmpiricalDistribution& x,
                   const EmpiricalDistribution& y);

// Exact earth mover's distance by the network simplex method.
// Throws InvalidArgument if a marginal is negative, does not sum to 1
// within 1e-12, a cost is not finite, or the problem exceeds the size guard.
TransportPlan emd(const Matrix& costs, const Vector& a, const Vector& b);

// Verifies nonnegativity, marginals (tol) and the reported total cost;
// throws std::logic_error describing the first violation.
void check_plan(const TransportPlan& plan, const Matrix& costs, const Vector& a, const Vector& b,
                double tol = 1e-8);

// Complementary slackness of the reported duals within tol.
bool satisfies_complementary_slackness(const TransportPlan& plan, const Matrix& costs,
                                       double tol = 1e-7);

struct WassersteinResult {
  double value = 0.0;
  TransportPlan plan;
};

WassersteinResult wasserstein(const GroundMetric& metric, const EmpiricalDistribution& x,
                              const EmpiricalDistribution& y);

struct WassersteinGradient {
  double value = 0.0;
  Matrix gradient;  // k x D
};

// A distribution together with its image under a low-rank metric; reusing
// the projection avoids recomputing W x for every pair.
struct ProjectedDistribution {
  const EmpiricalDistribution* source = nullptr;
  RowMatrix projected;  // n x k
};

ProjectedDistribution project(const LowRankMahalanobis& params, const EmpiricalDistribution& dist);

// Value of the parameterised Wasserstein distance and its envelope gradient
// with respect to W: the optimal coupling is held fixed and point pairs at
// zero distance are skipped.
WassersteinGradient wasserstein_gradient(const LowRankMahalanobis& params,
                                         const EmpiricalDistribution& x,
                                         const EmpiricalDistribution& y);
WassersteinGradient wasserstein_gradient(const ProjectedDistribution& x,
                                         const ProjectedDistribution& y);

// Value only, on projected inputs.
double wasserstein_value(const ProjectedDistribution& x, const ProjectedDistribution& y);

}  // namespace groundml

#endif  // GROUNDML_OT_HPP_
