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
#include "groundml/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "groundml/adam.hpp"
#include "groundml/ot.hpp"
#include "groundml/parallel.hpp"
#include "groundml/random.hpp"

namespace groundml {

std::string_view to_string(Regularizer r) { return r == Regularizer::l1 ? "l1" : "frobenius"; }

std::string_view to_string(InitKind k) {
  switch (k) {
    case InitKind::identity_truncated: return "identity_truncated";
    case InitKind::random_gaussian: return "random_gaussian";
    case InitKind::zero: return "zero";
  }
  return "unknown";
}

Regularizer parse_regularizer(std::string_view name) {
  if (name == "l1") return Regularizer::l1;
  if (name == "frobenius" || name == "l2") return Regularizer::frobenius;
  throw InvalidArgument("unknown regularizer '" + std::string(name) + "'");
}

InitKind parse_init_kind(std::string_view name) {
  if (name == "identity_truncated" || name == "identity") return InitKind::identity_truncated;
  if (name == "random_gaussian" || name == "random") return InitKind::random_gaussian;
  if (name == "zero") return InitKind::zero;
  throw InvalidArgument("unknown init '" + std::string(name) + "'");
}

void TrainConfig::validate(Index dimension) const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha must be positive");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda must be nonnegative");
  if (rank_k < 1 || rank_k > dimension) {
    throw InvalidArgument("rank_k must lie in [1, " + std::to_string(dimension) + "]");
  }
  if (neighbor_t < 1) throw InvalidArgument("neighbor_t must be positive");
  if (batch_size < 1) throw InvalidArgument("batch_size must be positive");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InvalidArgument("learning_rate must be positive");
  }
  if (epochs < 0) throw InvalidArgument("epochs must be nonnegative");
}

LowRankMahalanobis initialize_params(const TrainConfig& config, Index dimension) {
  switch (config.init) {
    case InitKind::identity_truncated:
      return LowRankMahalanobis::identity_truncated(config.rank_k, dimension);
    case InitKind::zero:
      return LowRankMahalanobis::zero(config.rank_k, dimension);
    case InitKind::random_gaussian: {
      Rng rng = make_rng(config.seed, "init");
      std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(static_cast<double>(dimension)));
      Matrix w(config.rank_k, dimension);
      for (Index c = 0; c < w.cols(); ++c) {
        for (Index r = 0; r < w.rows(); ++r) w(r, c) = normal(rng);
      }
      return LowRankMahalanobis(std::move(w));
    }
  }
  throw InvalidArgument("unknown init");
}

double triplet_term(const LowRankMahalanobis& params, const EmpiricalDistribution& xi,
                    const EmpiricalDistribution& xj, const EmpiricalDistribution& xk,
                    double alpha) {
  const double w_ij = wasserstein(params, xi, xj).value;
  const double w_jk = wasserstein(params, xj, xk).value;
  return std::max(alpha - (w_jk - w_ij), 0.0);
}

double regularizer_value(const LowRankMahalanobis& params, Regularizer kind) {
  const Matrix& w = params.weights();
  return kind == Regularizer::l1 ? w.cwiseAbs().sum() : w.squaredNorm();
}

Matrix regularizer_gradient(const LowRankMahalanobis& params, Regularizer kind) {
  const Matrix& w = params.weights();
  if (kind == Regularizer::frobenius) return 2.0 * w;
  return w.unaryExpr([](double v) { return static_cast<double>((v > 0.0) - (v < 0.0)); });
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

Pair ordered(std::size_t a, std::size_t b) { return a < b ? Pair{a, b} : Pair{b, a}; }

// Wasserstein values (and optionally gradients) for every unordered pair
// referenced by a triplet list, each solved once.
class PairEvaluator {
 public:
  PairEvaluator(const LowRankMahalanobis& params, const LabeledDataset& dataset,
                std::span<const Triplet> triplets, bool with_gradient, unsigned threads) {
    for (const auto& t : triplets) {
      if (!is_valid_triplet(dataset, t)) throw InvalidArgument("triplet is inconsistent with the dataset labels");
      index_.try_emplace(ordered(t.i, t.j), 0);
      index_.try_emplace(ordered(t.j, t.k), 0);
    }
    std::vector<Pair> pairs;
    pairs.reserve(index_.size());
    for (auto& [pair, slot] : index_) {
      slot = pairs.size();
      pairs.push_back(pair);
    }
    std::vector<std::size_t> used;
    for (const auto& p : pairs) {
      used.push_back(p.first);
      used.push_back(p.second);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::map<std::size_t, ProjectedDistribution> projected;
    for (std::size_t d : used) projected.emplace(d, project(params, dataset[d]));

    values_.assign(pairs.size(), 0.0);
    if (with_gradient) gradients_.assign(pairs.size(), Matrix());
    parallel_for(pairs.size(), threads, [&](std::size_t p) {
      const auto& x = projected.at(pairs[p].first);
      const auto& y = projected.at(pairs[p].second);
      if (with_gradient) {
        auto g = wasserstein_gradient(x, y);
        values_[p] = g.value;
        gradients_[p] = std::move(g.gradient);
      } else {
        values_[p] = wasserstein_value(x, y);
      }
    });
  }

  double value(std::size_t a, std::size_t b) const { return values_[index_.at(ordered(a, b))]; }
  const Matrix& gradient(std::size_t a, std::size_t b) const {
    return gradients_[index_.at(ordered(a, b))];
  }

 private:
  std::map<Pair, std::size_t> index_;
  std::vector<double> values_;
  std::vector<Matrix> gradients_;
};

double hinge(const PairEvaluator& eval, const Triplet& t, double alpha) {
  return std::max(alpha - (eval.value(t.j, t.k) - eval.value(t.i, t.j)), 0.0);
}

double triplet_sum(const PairEvaluator& eval, std::span<const Triplet> triplets, double alpha) {
  double sum = 0.0;
  for (const auto& t : triplets) sum += hinge(eval, t, alpha);
  return sum;
}

}  // namespace

double total_loss(const LowRankMahalanobis& params, const LabeledDataset& dataset,
                  std::span<const Triplet> triplets, const TrainConfig& config) {
  const PairEvaluator eval(params, dataset, triplets, false, config.threads);
  return triplet_sum(eval, triplets, config.alpha) +
         config.lambda * regularizer_value(params, config.regularizer);
}

namespace {

struct BatchResult {
  double loss = 0.0;  // triplet part only
  Matrix gradient;
};

BatchResult batch_gradient(const LowRankMahalanobis& params, const LabeledDataset& dataset,
                           std::span<const Triplet> batch, const TrainConfig& config) {
  const PairEvaluator eval(params, dataset, batch, true, config.threads);
  BatchResult out;
  out.gradient = Matrix::Zero(params.rank(), params.dimension());
  for (const auto& t : batch) {
    const double h = hinge(eval, t, config.alpha);
    out.loss += h;
    if (h > 0.0) {
      out.gradient += eval.gradient(t.i, t.j);
      out.gradient -= eval.gradient(t.j, t.k);
    }
  }
  if (config.lambda > 0.0) out.gradient += config.lambda * regularizer_gradient(params, config.regularizer);
  return out;
}

}  // namespace

Matrix loss_gradient(const LowRankMahalanobis& params, const LabeledDataset& dataset,
                     std::span<const Triplet> batch, const TrainConfig& config) {
  if (batch.empty()) throw InvalidArgument("empty triplet batch");
  return batch_gradient(params, dataset, batch, config).gradient;
}

TrainReport train(const LabeledDataset& dataset, const TripletSet& triplets,
                  const TrainConfig& config) {
  config.validate(dataset.dimension());
  if (triplets.empty()) throw InvalidArgument("cannot train on an empty triplet set");
  const auto started = std::chrono::steady_clock::now();

  TrainReport report;
  report.final_params = initialize_params(config, dataset.dimension());
  report.initial_loss = total_loss(report.final_params, dataset, triplets.triplets, config);
  if (!std::isfinite(report.initial_loss)) throw TrainingError("non-finite loss before training");

  Matrix w = report.final_params.weights();
  AdamOptimizer adam(config.learning_rate);
  std::vector<Triplet> order = triplets.triplets;
  Rng shuffle_rng = make_rng(config.seed, "batch-shuffle");
  const auto batch = static_cast<std::size_t>(config.batch_size);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    for (std::size_t start = 0, b = 0; start < order.size(); start += batch, ++b) {
      const std::size_t len = std::min(batch, order.size() - start);
      const LowRankMahalanobis current(w);
      const auto result =
          batch_gradient(current, dataset, std::span<const Triplet>(order).subspan(start, len), config);
      if (!std::isfinite(result.loss) || !result.gradient.allFinite()) {
        std::ostringstream os;
        os << "non-finite loss at epoch " << epoch << ", batch " << b;
        throw TrainingError(os.str());
      }
      adam.step(w, result.gradient);
      if (!w.allFinite()) {
        std::ostringstream os;
        os << "non-finite parameters at epoch " << epoch << ", batch " << b;
        throw TrainingError(os.str());
      }
    }
    report.final_params = LowRankMahalanobis(w);
    const double loss = total_loss(report.final_params, dataset, triplets.triplets, config);
    if (!std::isfinite(loss)) {
      std::ostringstream os;
      os << "non-finite loss at epoch " << epoch << " (end of epoch)";
      throw TrainingError(os.str());
    }
    report.loss_trace.push_back(loss);
    ++report.epochs_run;
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

MarginCheck margin_separation_check(const LowRankMahalanobis& params, const LabeledDataset& dataset,
                                    std::span<const Triplet> triplets, double alpha) {
  const PairEvaluator eval(params, dataset, triplets, false, 1);
  MarginCheck out;
  for (const auto& t : triplets) {
    if (eval.value(t.j, t.k) - eval.value(t.i, t.j) < alpha) out.violating.push_back(t);
  }
  out.separated = out.violating.empty();
  out.unregularized_loss = triplet_sum(eval, triplets, alpha);
  if (out.separated != (out.unregularized_loss == 0.0)) {
    throw std::logic_error("margin separation and zero loss disagree");
  }
  return out;
}

}  // namespace groundml
