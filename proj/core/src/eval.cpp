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
#include "groundml/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "groundml/ot.hpp"
#include "groundml/parallel.hpp"
#include "groundml/random.hpp"
#include "groundml/triplets.hpp"

namespace groundml {

void DistanceMatrix::validate() const {
  const auto n = static_cast<Index>(ids.size());
  if (values.rows() != n || values.cols() != n) throw InvalidArgument("distance matrix shape differs from id count");
  if (!values.allFinite()) throw InvalidArgument("distance matrix has non-finite entries");
  if ((values.array() < 0.0).any()) throw InvalidArgument("distance matrix has negative entries");
  if (n > 0 && (values - values.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw InvalidArgument("distance matrix is not symmetric");
  }
  if (n > 0 && values.diagonal().cwiseAbs().maxCoeff() != 0.0) {
    throw InvalidArgument("distance matrix has a nonzero diagonal");
  }
}

namespace {

// Projects every distribution once when the metric is learned.
class WassersteinOracle {
 public:
  WassersteinOracle(const GroundMetric& metric, const LabeledDataset& a, const LabeledDataset* b)
      : metric_(metric) {
    if (const auto* params = std::get_if<LowRankMahalanobis>(&metric)) {
      for (const auto& d : a.distributions()) left_.push_back(project(*params, d));
      if (b != nullptr) {
        for (const auto& d : b->distributions()) right_.push_back(project(*params, d));
      }
    }
  }

  double operator()(const LabeledDataset& a, std::size_t i, const LabeledDataset& b, std::size_t j,
                    bool same_side) const {
    if (std::holds_alternative<LowRankMahalanobis>(metric_)) {
      const auto& right = same_side ? left_ : right_;
      return wasserstein_value(left_[i], right[j]);
    }
    return wasserstein(metric_, a[i], b[j]).value;
  }

 private:
  const GroundMetric& metric_;
  std::vector<ProjectedDistribution> left_;
  std::vector<ProjectedDistribution> right_;
};

}  // namespace

DistanceMatrix pairwise_wasserstein(const LabeledDataset& dataset, const GroundMetric& metric,
                                    unsigned threads) {
  const std::size_t n = dataset.size();
  if (n < 2) throw InvalidArgument("pairwise distances need at least 2 distributions");
  const WassersteinOracle oracle(metric, dataset, nullptr);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> values(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    values[p] = oracle(dataset, pairs[p].first, dataset, pairs[p].second, true);
  });
  DistanceMatrix out;
  out.values = Matrix::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto i = static_cast<Index>(pairs[p].first);
    const auto j = static_cast<Index>(pairs[p].second);
    out.values(i, j) = out.values(j, i) = values[p];
  }
  for (const auto& d : dataset.distributions()) out.ids.push_back(d.id);
  return out;
}

Matrix cross_wasserstein(const LabeledDataset& from, const LabeledDataset& to,
                         const GroundMetric& metric, unsigned threads) {
  const WassersteinOracle oracle(metric, from, &to);
  const std::size_t rows = from.size();
  const std::size_t cols = to.size();
  Matrix out(static_cast<Index>(rows), static_cast<Index>(cols));
  parallel_for(rows * cols, threads, [&](std::size_t p) {
    const std::size_t i = p / cols;
    const std::size_t j = p % cols;
    out(static_cast<Index>(i), static_cast<Index>(j)) = oracle(from, i, to, j, false);
  });
  return out;
}

Matrix cross_ground(const RowMatrix& from, const RowMatrix& to, const GroundMetric& metric,
                    unsigned threads) {
  if (from.cols() != to.cols()) throw InvalidArgument("dimension mismatch between point sets");
  Matrix out(from.rows(), to.rows());
  if (const auto* params = std::get_if<LowRankMahalanobis>(&metric)) {
    const RowMatrix pf = params->project(from);
    const RowMatrix pt = params->project(to);
    parallel_for(static_cast<std::size_t>(from.rows()), threads, [&](std::size_t i) {
      const auto r = static_cast<Index>(i);
      for (Index j = 0; j < pt.rows(); ++j) out(r, j) = (pf.row(r) - pt.row(j)).norm();
    });
    return out;
  }
  const auto kind = std::get<BaselineMetric>(metric);
  parallel_for(static_cast<std::size_t>(from.rows()), threads, [&](std::size_t i) {
    const auto r = static_cast<Index>(i);
    for (Index j = 0; j < to.rows(); ++j) {
      out(r, j) = baseline_distance(kind, from.row(r).transpose(), to.row(j).transpose());
    }
  });
  return out;
}

DistanceMatrix pairwise_ground(const RowMatrix& points, std::vector<std::string> ids,
                               const GroundMetric& metric, unsigned threads) {
  if (points.rows() < 2) throw InvalidArgument("pairwise distances need at least 2 points");
  if (static_cast<Index>(ids.size()) != points.rows()) throw InvalidArgument("one id per point is required");
  DistanceMatrix out;
  out.ids = std::move(ids);
  out.values = cross_ground(points, points, metric, threads);
  // Symmetrise from the upper triangle so rounding cannot break symmetry.
  for (Index i = 0; i < out.values.rows(); ++i) {
    out.values(i, i) = 0.0;
    for (Index j = i + 1; j < out.values.cols(); ++j) out.values(j, i) = out.values(i, j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// kNN

std::vector<int> knn_classify(const Matrix& test_to_train, std::span<const int> train_labels, int k) {
  const Index n_train = test_to_train.cols();
  if (n_train == 0 || train_labels.empty()) throw InvalidArgument("empty training set");
  if (static_cast<Index>(train_labels.size()) != n_train) {
    throw InvalidArgument("one training label per distance column is required");
  }
  if (k < 1) throw InvalidArgument("k must be positive");
  const Index kk = std::min<Index>(k, n_train);

  std::vector<int> predictions;
  predictions.reserve(static_cast<std::size_t>(test_to_train.rows()));
  std::vector<Index> order(static_cast<std::size_t>(n_train));
  for (Index r = 0; r < test_to_train.rows(); ++r) {
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + kk, order.end(), [&](Index a, Index b) {
      const double da = test_to_train(r, a);
      const double db = test_to_train(r, b);
      return da < db || (da == db && a < b);
    });
    std::map<int, std::pair<double, double>> votes;  // label -> (weight, summed distance)
    for (Index n = 0; n < kk; ++n) {
      const Index c = order[static_cast<std::size_t>(n)];
      const double d = test_to_train(r, c);
      auto& v = votes[train_labels[static_cast<std::size_t>(c)]];
      v.first += 1.0 / (d + kKnnEpsilon);
      v.second += d;
    }
    int best_label = votes.begin()->first;
    auto best = votes.begin()->second;
    for (const auto& [label, v] : votes) {
      if (v.first > best.first || (v.first == best.first && v.second < best.second)) {
        best = v;
        best_label = label;
      }
    }
    predictions.push_back(best_label);
  }
  return predictions;
}

std::string_view to_string(EvalLevel level) {
  return level == EvalLevel::point ? "point" : "distribution";
}

EvalLevel parse_eval_level(std::string_view name) {
  if (name == "distribution" || name == "patient") return EvalLevel::distribution;
  if (name == "point" || name == "cell") return EvalLevel::point;
  throw InvalidArgument("unknown evaluation level '" + std::string(name) + "'");
}

std::string MethodSpec::name() const {
  return learned ? std::string("ggml") : std::string(to_string(baseline));
}

BenchmarkResult classification_benchmark(const LabeledDataset& dataset, const MethodSpec& method,
                                         const BenchmarkOptions& options) {
  dataset.require_classes(2);
  if (options.splits < 1) throw InvalidArgument("splits must be positive");
  if (options.knn_k < 1) throw InvalidArgument("knn k must be positive");
  if (method.learned) method.train.validate(dataset.dimension());

  BenchmarkResult result;
  for (int s = 0; s < options.splits; ++s) {
    const std::uint64_t split_seed = derive_seed(options.seed, "split", static_cast<std::uint64_t>(s));
    const DatasetSplit split =
        group_shuffle_split(dataset, options.test_fraction, options.validation_fraction, split_seed);
    const LabeledDataset& scored = options.score_validation ? split.validation : split.test;
    if (scored.empty()) throw InvalidArgument("split produced an empty evaluation partition");

    std::set<std::string> train_ids;
    for (const auto& d : split.train.distributions()) train_ids.insert(d.id);
    for (const auto& d : scored.distributions()) {
      if (train_ids.count(d.id) != 0) throw std::logic_error("evaluation distribution leaked into training");
    }

    GroundMetric metric = method.baseline;
    if (method.learned) {
      TrainConfig cfg = method.train;
      cfg.seed = derive_seed(options.seed, "train", static_cast<std::uint64_t>(s));
      if (cfg.threads == 1 && options.threads != 1) cfg.threads = options.threads;
      const TripletSet triplets = build_triplets(split.train, cfg.neighbor_t, cfg.neighbor_source,
                                                 cfg.seed, cfg.threads);
      metric = train(split.train, triplets, cfg).final_params;
    }

    std::vector<int> truth;
    std::vector<int> predicted;
    if (options.level == EvalLevel::distribution) {
      const Matrix d = cross_wasserstein(scored, split.train, metric, options.threads);
      const auto train_labels = split.train.labels();
      predicted = knn_classify(d, train_labels, options.knn_k);
      truth = scored.labels();
    } else {
      const Matrix d = cross_ground(scored.stacked_points(), split.train.stacked_points(), metric,
                                    options.threads);
      const auto train_labels = split.train.stacked_labels();
      predicted = knn_classify(d, train_labels, options.knn_k);
      truth = scored.stacked_labels();
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) correct += predicted[i] == truth[i] ? 1 : 0;
    result.accuracies.push_back(static_cast<double>(correct) / static_cast<double>(truth.size()));
    result.split_seeds.push_back(split_seed);
  }
  const double n = static_cast<double>(result.accuracies.size());
  result.mean = std::accumulate(result.accuracies.begin(), result.accuracies.end(), 0.0) / n;
  double var = 0.0;
  for (double a : result.accuracies) var += (a - result.mean) * (a - result.mean);
  result.variance = var / n;
  return result;
}

// ---------------------------------------------------------------------------
// Agglomerative clustering

std::string_view to_string(Linkage linkage) {
  switch (linkage) {
    case Linkage::average: return "average";
    case Linkage::complete: return "complete";
    case Linkage::single: return "single";
  }
  return "unknown";
}

Linkage parse_linkage(std::string_view name) {
  if (name == "average") return Linkage::average;
  if (name == "complete") return Linkage::complete;
  if (name == "single") return Linkage::single;
  throw InvalidArgument("unknown linkage '" + std::string(name) + "'");
}

namespace {

double median_of_pairs(const Matrix& d) {
  std::vector<double> values;
  for (Index i = 0; i < d.rows(); ++i) {
    for (Index j = i + 1; j < d.cols(); ++j) values.push_back(d(i, j));
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::vector<int> agglomerative_cluster(const DistanceMatrix& dm, Linkage linkage, ClusterTarget target) {
  const Index n = dm.values.rows();
  if (n < 2) throw InvalidArgument("clustering needs at least 2 items");
  if (dm.values.cols() != n) throw InvalidArgument("distance matrix must be square");
  if (target.kind == ClusterTarget::Kind::n_clusters && (target.clusters < 1 || target.clusters > n)) {
    throw InvalidArgument("cluster count " + std::to_string(target.clusters) + " exceeds item count " +
                          std::to_string(n));
  }
  const double threshold = target.kind == ClusterTarget::Kind::threshold_median
                               ? median_of_pairs(dm.values)
                               : std::numeric_limits<double>::infinity();
  const Index stop_at = target.kind == ClusterTarget::Kind::n_clusters ? target.clusters : 1;

  Matrix d = dm.values;
  std::vector<bool> active(static_cast<std::size_t>(n), true);
  std::vector<double> size(static_cast<std::size_t>(n), 1.0);
  std::vector<Index> owner(static_cast<std::size_t>(n));
  std::iota(owner.begin(), owner.end(), 0);

  // Nearest active partner with a larger index, per active row.
  std::vector<Index> nn(static_cast<std::size_t>(n), -1);
  std::vector<double> nnd(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  auto refresh = [&](Index r) {
    nn[r] = -1;
    nnd[r] = std::numeric_limits<double>::infinity();
    for (Index c = r + 1; c < n; ++c) {
      if (active[c] && d(r, c) < nnd[r]) {
        nnd[r] = d(r, c);
        nn[r] = c;
      }
    }
  };
  for (Index r = 0; r < n; ++r) refresh(r);

  for (Index clusters = n; clusters > stop_at; --clusters) {
    Index a = -1;
    for (Index r = 0; r < n; ++r) {
      if (active[r] && nn[r] >= 0 && (a < 0 || nnd[r] < nnd[a])) a = r;
    }
    if (a < 0) break;
    const Index b = nn[a];
    if (nnd[a] > threshold) break;

    // Lance-Williams update of the merged cluster (kept at index a).
    for (Index k = 0; k < n; ++k) {
      if (!active[k] || k == a || k == b) continue;
      double merged = 0.0;
      switch (linkage) {
        case Linkage::single: merged = std::min(d(a, k), d(b, k)); break;
        case Linkage::complete: merged = std::max(d(a, k), d(b, k)); break;
        case Linkage::average:
          merged = (size[a] * d(a, k) + size[b] * d(b, k)) / (size[a] + size[b]);
          break;
      }
      d(a, k) = d(k, a) = merged;
    }
    size[a] += size[b];
    active[b] = false;
    for (Index i = 0; i < n; ++i) {
      if (owner[i] == b) owner[i] = a;
    }
    for (Index r = 0; r < n; ++r) {
      if (!active[r]) continue;
      if (r == a || nn[r] == a || nn[r] == b) {
        refresh(r);
      } else if (r < a && (d(r, a) < nnd[r] || (d(r, a) == nnd[r] && a < nn[r]))) {
        nnd[r] = d(r, a);
        nn[r] = a;
      }
    }
  }

  std::map<Index, int> relabel;
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    auto [it, inserted] = relabel.try_emplace(owner[i], static_cast<int>(relabel.size()));
    labels[i] = it->second;
  }
  return labels;
}

// ---------------------------------------------------------------------------
// Partition agreement

ClusteringScores clustering_metrics(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size()) throw InvalidArgument("label vectors differ in length");
  if (predicted.empty()) throw InvalidArgument("label vectors are empty");
  const double n = static_cast<double>(truth.size());

  std::map<int, double> pred_counts;
  std::map<int, double> true_counts;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    pred_counts[predicted[i]] += 1.0;
    true_counts[truth[i]] += 1.0;
    joint[{predicted[i], truth[i]}] += 1.0;
  }

  auto entropy = [n](const std::map<int, double>& counts) {
    double h = 0.0;
    for (const auto& [label, c] : counts) h -= (c / n) * std::log(c / n);
    return h;
  };
  double mi = 0.0;
  for (const auto& [cell, c] : joint) {
    mi += (c / n) * std::log(n * c / (pred_counts[cell.first] * true_counts[cell.second]));
  }
  mi = std::max(mi, 0.0);

  auto pairs = [](double c) { return c * (c - 1.0) / 2.0; };
  double index = 0.0;
  for (const auto& [cell, c] : joint) index += pairs(c);
  double sum_pred = 0.0;
  double sum_true = 0.0;
  for (const auto& [l, c] : pred_counts) sum_pred += pairs(c);
  for (const auto& [l, c] : true_counts) sum_true += pairs(c);
  const double total_pairs = pairs(n);
  const double expected = total_pairs > 0.0 ? sum_pred * sum_true / total_pairs : 0.0;
  const double maximum = 0.5 * (sum_pred + sum_true);
  const double denom = maximum - expected;
  const double ari = denom == 0.0 ? 1.0 : (index - expected) / denom;

  ClusteringScores out;
  out.mi = mi;
  out.ari = ari;
  out.vi = std::max(0.0, entropy(pred_counts) + entropy(true_counts) - 2.0 * mi);
  return out;
}

}  // namespace groundml
