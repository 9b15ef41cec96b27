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
#ifndef GROUNDML_SRC_NETWORK_SIMPLEX_HPP_
#define GROUNDML_SRC_NETWORK_SIMPLEX_HPP_

#include "groundml/types.hpp"

namespace groundml::detail {

struct TransportSolution {
  Matrix flow;
  Vector source_potential;
  Vector target_potential;
  double cost = 0.0;
  long iterations = 0;
};

// Primal network simplex on the complete bipartite transportation network,
// with an artificial root and a strongly feasible spanning tree (so degenerate
// pivots cannot cycle). Supplies must balance.
TransportSolution solve_transport(const Matrix& costs, const Vector& supply, const Vector& demand);

}  // namespace groundml::detail

#endif  // GROUNDML_SRC_NETWORK_SIMPLEX_HPP_
