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
#ifndef GROUNDML_TRAINER_HPP_
#define GROUNDML_TRAINER_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "groundml/dataset.hpp"
#include "groundml/metric.hpp"
#include "groundml/triplets.hpp"

namespace groundml {

enum class Regularizer { frobenius, l1 };
enum class InitKind { identity_truncated, random_gaussian, zero };

std::string_view to_string(Regularizer r);
std::string_view to_string(InitKind k);
Regularizer parse_regularizer(std::string_view name);
InitKind parse_init_kind(std::string_view name);

struct TrainConfig {
  double alpha = 10.0;
  double lambda = 0.5;
  Regularizer regularizer = Regularizer::l1;
  Index rank_k = 5;
  int neighbor_t = 5;
  NeighborSource neighbor_source = NeighborSource::wasserstein_euclidean;
  int batch_size = 128;
  double learning_rate = 0.01;
  int epochs = 30;
  std::uint64_t seed = 0;
  InitKind init = InitKind::identity_truncated;
  unsigned threads = 1;  // 0 = hardware concurrency

  // Throws InvalidArgument naming the offending field.
  void validate(Index dimension) const;
};

struct TrainReport {
  double initial_loss = 0.0;
  std::vector<double> loss_trace;  // total loss after each epoch
  LowRankMahalanobis final_params;
  int epochs_run = 0;
  double wall_time_seconds = 0.0;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Identity rows, Gaussian entries with sd 1/sqrt(D), or zeros.
LowRankMahalanobis initialize_params(const TrainConfig& config, Index dimension);

// max(W(X_i, X_j) - W(X_j, X_k) + alpha, 0).
double triplet_term(const LowRankMahalanobis& params, const EmpiricalDistribution& xi,
                    const EmpiricalDistribution& xj, const EmpiricalDistribution& xk,
                    double alpha);

// Squared Frobenius norm or entrywise l1 norm of W.
double regularizer_value(const LowRankMahalanobis& params, Regularizer kind);
Matrix regularizer_gradient(const LowRankMahalanobis& params, Regularizer kind);

// Sum of triplet terms plus lambda * R(W).
double total_loss(const LowRankMahalanobis& params, const LabeledDataset& dataset,
                  std::span<const Triplet> triplets, const TrainConfig& config);

// Gradient of the batch loss: for each triplet with a strictly positive hinge,
// grad W(X_i, X_j) - grad W(X_j, X_k); plus lambda * grad R. The l1 subgradient
// uses sign(0) = 0.
Matrix loss_gradient(const LowRankMahalanobis& params, const LabeledDataset& dataset,
                     std::span<const Triplet> batch, const TrainConfig& config);

// Adam over shuffled minibatches for a fixed number of epochs. Reductions run
// in triplet order, so results do not depend on config.threads.
TrainReport train(const LabeledDataset& dataset, const TripletSet& triplets,
                  const TrainConfig& config);

struct MarginCheck {
  bool separated = true;
  std::vector<Triplet> violating;
  double unregularized_loss = 0.0;
};

// True iff W(X_j, X_k) - W(X_i, X_j) >= alpha for every triplet. Also
// evaluates the unregularised loss and throws std::logic_error if the two
// disagree about separation.
MarginCheck margin_separation_check(const LowRankMahalanobis& params, const LabeledDataset& dataset,
                                    std::span<const Triplet> triplets, double alpha);

}  // namespace groundml

#endif  // GROUNDML_TRAINER_HPP_
