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
#ifndef GROUNDML_DATASET_HPP_
#define GROUNDML_DATASET_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "groundml/types.hpp"

namespace groundml {

// A weighted finite point cloud with a class label (one patient / sample).
struct EmpiricalDistribution {
  std::string id;
  RowMatrix points;  // one point per row, n x D
  Vector weights;    // length n, nonnegative, sums to 1
  int label = 0;     // index into LabeledDataset::class_names()

  Index size() const { return points.rows(); }
  Index dimension() const { return points.cols(); }
};

// Builds a distribution with uniform weights 1/n.
EmpiricalDistribution make_distribution(std::string id, RowMatrix points, int label);

// Throws InvalidArgument if the distribution is empty, has non-finite
// coordinates, or weights that are negative or do not sum to 1 within 1e-12.
void validate_distribution(const EmpiricalDistribution& dist);

class LabeledDataset {
 public:
  LabeledDataset() = default;

  // Validates every distribution, the shared dimension, unique ids and label
  // range. Does not require two classes to be present; see require_classes.
  LabeledDataset(std::vector<EmpiricalDistribution> distributions,
                 std::vector<std::string> class_names, Index dimension,
                 std::vector<std::string> feature_names = {});

  const std::vector<EmpiricalDistribution>& distributions() const { return distributions_; }
  const EmpiricalDistribution& operator[](std::size_t i) const { return distributions_[i]; }
  std::size_t size() const { return distributions_.size(); }
  bool empty() const { return distributions_.empty(); }
  Index dimension() const { return dimension_; }

  const std::vector<std::string>& class_names() const { return class_names_; }
  int class_count() const { return static_cast<int>(class_names_.size()); }

  // Defaults to f0..f{D-1}.
  const std::vector<std::string>& feature_names() const { return feature_names_; }

  std::vector<int> labels() const;
  // Distinct labels actually carried by at least one distribution.
  int present_class_count() const;
  // Distribution indices grouped by label; outer index is the label.
  std::vector<std::vector<std::size_t>> indices_by_class() const;

  // Throws InvalidArgument("fewer than N classes") unless at least
  // `minimum` distinct labels are present.
  void require_classes(int minimum = 2) const;

  // Sub-dataset of the given distributions in the given order, keeping the
  // parent's class table so labels stay comparable across partitions.
  LabeledDataset select(const std::vector<std::size_t>& indices) const;

  // All points stacked in distribution order, with the label of the owning
  // distribution per row.
  RowMatrix stacked_points() const;
  std::vector<int> stacked_labels() const;

  // Stable hex fingerprint over ids, labels, and the dimension.
  std::string fingerprint() const;

 private:
  std::vector<EmpiricalDistribution> distributions_;
  std::vector<std::string> class_names_;
  std::vector<std::string> feature_names_;
  Index dimension_ = 0;
};

// CSV with header `dist_id,label,f0,...,f{D-1}`, one point per row. Rows of a
// distribution keep their file order. Distributions appear in order of first
// occurrence; class names are sorted lexicographically.
LabeledDataset load_dataset(const std::filesystem::path& path);
LabeledDataset parse_dataset(std::istream& in, const std::string& source_name);
void write_dataset(const LabeledDataset& dataset, std::ostream& out);
void write_dataset(const LabeledDataset& dataset, const std::filesystem::path& path);

struct SynthConfig {
  Index dimension = 2;
  int distributions_per_class = 10;
  int points_per_distribution = 50;
  int class_count = 3;
  Index signal_axis = 0;
  double class_offset = 1.0;
  // Centres of the two class-independent "corner" modes. Empty means the
  // default +/- 4 * sqrt(2/D) * (1, ..., 1), i.e. +/-(4, 4) in two dimensions.
  std::vector<Vector> mode_offsets;
  // Per-axis standard deviations. Empty means 1.0 on every axis.
  Vector noise_scales;
  std::uint64_t seed = 0;

  // Two-dimensional variant with extra noise (sd 3.0) on axis 1.
  static SynthConfig anisotropic_2d(std::uint64_t seed = 0);
  // High-dimensional variant with identical noise on every axis.
  static SynthConfig isotropic(Index dimension, std::uint64_t seed = 0);

  void validate() const;
};

// Equal-weight mixture of three Gaussian modes per distribution: two corner
// modes shared by every class and a centre mode shifted along signal_axis by
// class_index * class_offset. Point i of a distribution is drawn from mode
// i % 3. Bit-reproducible for a given config.
LabeledDataset generate_synthetic(const SynthConfig& config);

struct DatasetSplit {
  LabeledDataset train;
  LabeledDataset test;
  LabeledDataset validation;
};

// Distribution-level split. The test count is round(n * test_fraction) and
// the validation count round((n - test) * validation_fraction), both spread
// over classes by largest remainder and drawn per class in seeded random
// order. Validation never takes a class's last training distribution.
DatasetSplit group_shuffle_split(const LabeledDataset& dataset, double test_fraction,
                                 double validation_fraction, std::uint64_t seed);

}  // namespace groundml

#endif  // GROUNDML_DATASET_HPP_
