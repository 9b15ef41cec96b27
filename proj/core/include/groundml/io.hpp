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
#ifndef GROUNDML_IO_HPP_
#define GROUNDML_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "groundml/eval.hpp"
#include "groundml/metric.hpp"

namespace groundml {

// k rows x D columns; the header row carries feature names.
void write_params(const LowRankMahalanobis& params, const std::vector<std::string>& feature_names,
                  const std::filesystem::path& path);
struct LoadedParams {
  LowRankMahalanobis params;
  std::vector<std::string> feature_names;
};
LoadedParams load_params(const std::filesystem::path& path);

void write_mahalanobis(const MahalanobisMatrix& m, const std::vector<std::string>& feature_names,
                       const std::filesystem::path& path);
void write_importance(const std::vector<FeatureImportance>& ranking,
                      const std::filesystem::path& path);

// Header `id,<id_0>,...`; each row starts with its id.
void write_distance_matrix(const DistanceMatrix& dm, const std::filesystem::path& path);
DistanceMatrix load_distance_matrix(const std::filesystem::path& path);

// `epoch,loss`; epoch 0 is the loss before training.
void write_loss_trace(double initial_loss, const std::vector<double>& trace,
                      const std::filesystem::path& path);
// `split,accuracy` rows followed by `mean` and `variance` summary rows.
void write_benchmark(const BenchmarkResult& result, const std::filesystem::path& path);
// `id,cluster`.
void write_clusters(const std::vector<std::string>& ids, const std::vector<int>& clusters,
                    const std::filesystem::path& path);

// One name per line (or a single comma-separated line).
std::vector<std::string> load_feature_names(const std::filesystem::path& path);

std::vector<std::string> default_feature_names(Index dimension);

// Shortest round-trip decimal form.
std::string format_double(double value);

std::string hash_file(const std::filesystem::path& path);

}  // namespace groundml

#endif  // GROUNDML_IO_HPP_
