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
#ifndef GROUNDML_EVAL_HPP_
#define GROUNDML_EVAL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "groundml/dataset.hpp"
#include "groundml/metric.hpp"
#include "groundml/trainer.hpp"

namespace groundml {

struct DistanceMatrix {
  std::vector<std::string> ids;
  Matrix values;

  std::size_t size() const { return ids.size(); }
  // Symmetric within 1e-9, zero diagonal, finite and nonnegative entries.
  void validate() const;
};

// Wasserstein distance between every pair of distributions; one solve per
// unordered pair.
DistanceMatrix pairwise_wasserstein(const LabeledDataset& dataset, const GroundMetric& metric,
                                    unsigned threads = 1);

// Rows: distributions of `from`; columns: distributions of `to`.
Matrix cross_wasserstein(const LabeledDataset& from, const LabeledDataset& to,
                         const GroundMetric& metric, unsigned threads = 1);

DistanceMatrix pairwise_ground(const RowMatrix& points, std::vector<std::string> ids,
                               const GroundMetric& metric, unsigned threads = 1);
Matrix cross_ground(const RowMatrix& from, const RowMatrix& to, const GroundMetric& metric,
                    unsigned threads = 1);

inline constexpr double kKnnEpsilon = 1e-12;

// Weighted kNN on a (test x train) distance matrix. Votes are 1 / (d + eps);
// ties go to the label with the smaller summed neighbour distance, then to the
// smaller label. k is clamped to the number of training items.
std::vector<int> knn_classify(const Matrix& test_to_train, std::span<const int> train_labels, int k);

enum class EvalLevel { distribution, point };
std::string_view to_string(EvalLevel level);
EvalLevel parse_eval_level(std::string_view name);

// A baseline metric, or GGML trained on each training partition.
struct MethodSpec {
  bool learned = false;
  BaselineMetric baseline = BaselineMetric::euclidean;
  TrainConfig train;

  static MethodSpec fixed(BaselineMetric m) { return MethodSpec{false, m, {}}; }
  static MethodSpec ggml(TrainConfig cfg) { return MethodSpec{true, BaselineMetric::euclidean, cfg}; }
  std::string name() const;
};

struct BenchmarkOptions {
  EvalLevel level = EvalLevel::distribution;
  int splits = 10;
  int knn_k = 5;
  double test_fraction = 0.5;
  double validation_fraction = 0.2;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // Classify the validation partition instead of the test partition.
  bool score_validation = false;
};

struct BenchmarkResult {
  std::vector<double> accuracies;
  std::vector<std::uint64_t> split_seeds;
  double mean = 0.0;
  double variance = 0.0;  // population variance over splits
};

// Repeated group-shuffle splits: trains on the training partition when the
// method is learned, then classifies test items against training items with
// knn_classify at the requested level.
BenchmarkResult classification_benchmark(const LabeledDataset& dataset, const MethodSpec& method,
                                         const BenchmarkOptions& options);

enum class Linkage { average, complete, single };
std::string_view to_string(Linkage linkage);
Linkage parse_linkage(std::string_view name);

struct ClusterTarget {
  enum class Kind { n_clusters, threshold_median } kind = Kind::n_clusters;
  int clusters = 2;

  static ClusterTarget count(int c) { return {Kind::n_clusters, c}; }
  static ClusterTarget median_threshold() { return {Kind::threshold_median, 0}; }
};

// Agglomerative clustering via Lance-Williams updates. At each step the
// closest pair of clusters merges (ties: lowest index pair). Labels are
// numbered by first occurrence in item order.
std::vector<int> agglomerative_cluster(const DistanceMatrix& dm, Linkage linkage,
                                       ClusterTarget target);

struct ClusteringScores {
  double mi = 0.0;   // nats
  double ari = 0.0;
  double vi = 0.0;   // nats
};

ClusteringScores clustering_metrics(std::span<const int> predicted, std::span<const int> truth);

}  // namespace groundml

#endif  // GROUNDML_EVAL_HPP_
