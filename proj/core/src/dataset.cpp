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
#include "groundml/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "csv.hpp"
#include "groundml/io.hpp"
#include "groundml/random.hpp"

namespace groundml {

EmpiricalDistribution make_distribution(std::string id, RowMatrix points, int label) {
  EmpiricalDistribution d;
  d.id = std::move(id);
  const Index n = points.rows();
  d.points = std::move(points);
  d.weights = n > 0 ? Vector::Constant(n, 1.0 / static_cast<double>(n)) : Vector();
  d.label = label;
  validate_distribution(d);
  return d;
}

void validate_distribution(const EmpiricalDistribution& dist) {
  if (dist.size() < 1) throw InvalidArgument("distribution '" + dist.id + "' has no points");
  if (dist.weights.size() != dist.size()) {
    throw InvalidArgument("distribution '" + dist.id + "': weight count differs from point count");
  }
  if (!dist.points.allFinite()) {
    throw InvalidArgument("distribution '" + dist.id + "' has non-finite coordinates");
  }
  if (!dist.weights.allFinite() || (dist.weights.array() < 0.0).any()) {
    throw InvalidArgument("distribution '" + dist.id + "' has negative or non-finite weights");
  }
  if (std::abs(dist.weights.sum() - 1.0) > 1e-12) {
    throw InvalidArgument("distribution '" + dist.id + "': weights do not sum to 1");
  }
}

LabeledDataset::LabeledDataset(std::vector<EmpiricalDistribution> distributions,
                               std::vector<std::string> class_names, Index dimension,
                               std::vector<std::string> feature_names)
    : distributions_(std::move(distributions)),
      class_names_(std::move(class_names)),
      feature_names_(std::move(feature_names)),
      dimension_(dimension) {
  if (dimension_ < 1) throw InvalidArgument("dataset dimension must be positive");
  if (feature_names_.empty()) feature_names_ = default_feature_names(dimension_);
  if (static_cast<Index>(feature_names_.size()) != dimension_) {
    throw InvalidArgument("feature name count differs from dimension");
  }
  std::unordered_set<std::string> seen;
  for (const auto& d : distributions_) {
    validate_distribution(d);
    if (d.dimension() != dimension_) {
      throw InvalidArgument("distribution '" + d.id + "' has dimension " +
                            std::to_string(d.dimension()) + ", expected " +
                            std::to_string(dimension_));
    }
    if (d.label < 0 || d.label >= class_count()) {
      throw InvalidArgument("distribution '" + d.id + "' has a label outside the class table");
    }
    if (!seen.insert(d.id).second) throw InvalidArgument("duplicate distribution id '" + d.id + "'");
  }
}

std::vector<int> LabeledDataset::labels() const {
  std::vector<int> out;
  out.reserve(distributions_.size());
  for (const auto& d : distributions_) out.push_back(d.label);
  return out;
}

int LabeledDataset::present_class_count() const {
  std::set<int> present;
  for (const auto& d : distributions_) present.insert(d.label);
  return static_cast<int>(present.size());
}

std::vector<std::vector<std::size_t>> LabeledDataset::indices_by_class() const {
  std::vector<std::vector<std::size_t>> groups(class_names_.size());
  for (std::size_t i = 0; i < distributions_.size(); ++i) {
    groups[distributions_[i].label].push_back(i);
  }
  return groups;
}

void LabeledDataset::require_classes(int minimum) const {
  if (present_class_count() < minimum) {
    throw InvalidArgument("fewer than " + std::to_string(minimum) + " classes");
  }
}

LabeledDataset LabeledDataset::select(const std::vector<std::size_t>& indices) const {
  std::vector<EmpiricalDistribution> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) picked.push_back(distributions_.at(i));
  return LabeledDataset(std::move(picked), class_names_, dimension_, feature_names_);
}

RowMatrix LabeledDataset::stacked_points() const {
  Index total = 0;
  for (const auto& d : distributions_) total += d.size();
  RowMatrix out(total, dimension_);
  Index row = 0;
  for (const auto& d : distributions_) {
    out.middleRows(row, d.size()) = d.points;
    row += d.size();
  }
  return out;
}

std::vector<int> LabeledDataset::stacked_labels() const {
  std::vector<int> out;
  for (const auto& d : distributions_) out.insert(out.end(), static_cast<std::size_t>(d.size()), d.label);
  return out;
}

std::string LabeledDataset::fingerprint() const {
  std::uint64_t h = fnv1a64(std::to_string(dimension_));
  for (const auto& d : distributions_) {
    h = fnv1a64(d.id, h);
    h = fnv1a64(":" + class_names_[d.label] + ";", h);
    h = fnv1a64(std::string_view(reinterpret_cast<const char*>(d.points.data()),
                                 static_cast<std::size_t>(d.points.size()) * sizeof(double)),
                h);
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// CSV ingestion

LabeledDataset parse_dataset(std::istream& in, const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;
  if (!csv::next_line(in, line, line_no)) throw ParseError(source_name, 1, "empty file");
  const auto header = csv::split(line);
  if (header.empty() || csv::trim(header[0]) != "dist_id") {
    throw ParseError(source_name, line_no, "header must start with 'dist_id'");
  }
  if (header.size() < 2 || csv::trim(header[1]) != "label") {
    throw ParseError(source_name, line_no, "missing label column");
  }
  if (header.size() < 3) throw ParseError(source_name, line_no, "no feature columns");
  const std::size_t dim = header.size() - 2;
  std::vector<std::string> feature_names;
  for (std::size_t c = 2; c < header.size(); ++c) feature_names.emplace_back(csv::trim(header[c]));

  struct Pending {
    std::string label;
    std::vector<double> values;
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, Pending> pending;
  std::size_t rows = 0;

  while (csv::next_line(in, line, line_no)) {
    if (csv::trim(line).empty()) continue;
    const auto fields = csv::split(line);
    if (fields.size() != header.size()) {
      throw ParseError(source_name, line_no,
                       "expected " + std::to_string(header.size()) + " columns, found " +
                           std::to_string(fields.size()));
    }
    const std::string id(csv::trim(fields[0]));
    const std::string label(csv::trim(fields[1]));
    if (id.empty()) throw ParseError(source_name, line_no, "empty dist_id");
    if (label.empty()) throw ParseError(source_name, line_no, "empty label");
    auto [it, inserted] = pending.try_emplace(id);
    if (inserted) {
      order.push_back(id);
      it->second.label = label;
    } else if (it->second.label != label) {
      throw ParseError(source_name, line_no, "distribution '" + id + "' changes label");
    }
    for (std::size_t c = 2; c < fields.size(); ++c) {
      const auto value = csv::parse_double(fields[c]);
      if (!value) {
        throw ParseError(source_name, line_no,
                         "non-numeric feature in column " + std::to_string(c + 1) + ": '" +
                             std::string(fields[c]) + "'");
      }
      if (!std::isfinite(*value)) {
        throw ParseError(source_name, line_no, "non-finite feature in column " + std::to_string(c + 1));
      }
      it->second.values.push_back(*value);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(source_name, line_no, "empty file: no data rows");

  std::set<std::string> label_set;
  for (const auto& [id, p] : pending) label_set.insert(p.label);
  std::vector<std::string> class_names(label_set.begin(), label_set.end());
  std::map<std::string, int> label_index;
  for (std::size_t i = 0; i < class_names.size(); ++i) label_index[class_names[i]] = static_cast<int>(i);

  std::vector<EmpiricalDistribution> distributions;
  distributions.reserve(order.size());
  for (const auto& id : order) {
    auto& p = pending.at(id);
    const Index n = static_cast<Index>(p.values.size() / dim);
    RowMatrix points = Eigen::Map<const RowMatrix>(p.values.data(), n, static_cast<Index>(dim));
    distributions.push_back(make_distribution(id, std::move(points), label_index.at(p.label)));
  }
  LabeledDataset dataset(std::move(distributions), std::move(class_names), static_cast<Index>(dim),
                         std::move(feature_names));
  dataset.require_classes(2);
  return dataset;
}

LabeledDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path.string());
  return parse_dataset(in, path.string());
}

void write_dataset(const LabeledDataset& dataset, std::ostream& out) {
  out << "dist_id,label";
  for (const auto& name : dataset.feature_names()) out << ',' << name;
  out << '\n';
  for (const auto& d : dataset.distributions()) {
    const std::string& label = dataset.class_names()[d.label];
    for (Index r = 0; r < d.size(); ++r) {
      out << d.id << ',' << label;
      for (Index c = 0; c < d.dimension(); ++c) out << ',' << format_double(d.points(r, c));
      out << '\n';
    }
  }
}

void write_dataset(const LabeledDataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dataset file: " + path.string());
  write_dataset(dataset, out);
}

// ---------------------------------------------------------------------------
// Synthetic data

SynthConfig SynthConfig::anisotropic_2d(std::uint64_t seed) {
  SynthConfig c;
  c.dimension = 2;
  c.noise_scales = Vector(2);
  c.noise_scales << 0.4, 10.0;
  c.seed = seed;
  return c;
}

SynthConfig SynthConfig::isotropic(Index dimension, std::uint64_t seed) {
  SynthConfig c;
  c.dimension = dimension;
  c.seed = seed;
  return c;
}

void SynthConfig::validate() const {
  if (dimension < 2) throw InvalidArgument("dimension must be >= 2");
  if (distributions_per_class < 1) throw InvalidArgument("distributions_per_class must be positive");
  if (points_per_distribution < 1) throw InvalidArgument("points_per_distribution must be positive");
  if (class_count < 2) throw InvalidArgument("class_count must be at least 2");
  if (signal_axis < 0 || signal_axis >= dimension) throw InvalidArgument("signal_axis out of range");
  if (!(class_offset >= 0.0) || !std::isfinite(class_offset)) {
    throw InvalidArgument("class_offset must be finite and nonnegative");
  }
  if (!mode_offsets.empty()) {
    if (mode_offsets.size() != 2) throw InvalidArgument("mode_offsets must hold two corner centres");
    for (const auto& m : mode_offsets) {
      if (m.size() != dimension || !m.allFinite()) throw InvalidArgument("mode_offsets have wrong dimension");
    }
  }
  if (noise_scales.size() != 0) {
    if (noise_scales.size() != dimension) throw InvalidArgument("noise_scales length differs from dimension");
    if (!noise_scales.allFinite() || (noise_scales.array() <= 0.0).any()) {
      throw InvalidArgument("noise_scales must be positive");
    }
  }
}

LabeledDataset generate_synthetic(const SynthConfig& config) {
  config.validate();
  const Index dim = config.dimension;

  std::vector<Vector> corners = config.mode_offsets;
  if (corners.empty()) {
    const double s = 4.0 * std::sqrt(2.0 / static_cast<double>(dim));
    corners = {Vector::Constant(dim, s), Vector::Constant(dim, -s)};
  }
  const Vector noise = config.noise_scales.size() == dim ? config.noise_scales : Vector::Ones(dim);

  Rng rng = make_rng(config.seed, "synth");
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<std::string> class_names;
  for (int c = 0; c < config.class_count; ++c) class_names.push_back("class" + std::to_string(c));

  std::vector<EmpiricalDistribution> distributions;
  const int width = config.distributions_per_class >= 100 ? 3 : 2;
  for (int c = 0; c < config.class_count; ++c) {
    Vector centre = Vector::Zero(dim);
    centre(config.signal_axis) = c * config.class_offset;
    for (int d = 0; d < config.distributions_per_class; ++d) {
      RowMatrix points(config.points_per_distribution, dim);
      for (int i = 0; i < config.points_per_distribution; ++i) {
        const Vector& mean = i % 3 == 0 ? corners[0] : (i % 3 == 1 ? corners[1] : centre);
        for (Index f = 0; f < dim; ++f) points(i, f) = mean(f) + noise(f) * normal(rng);
      }
      std::string index = std::to_string(d);
      index.insert(0, static_cast<std::size_t>(std::max<int>(0, width - static_cast<int>(index.size()))), '0');
      distributions.push_back(
          make_distribution("c" + std::to_string(c) + "_d" + index, std::move(points), c));
    }
  }
  return LabeledDataset(std::move(distributions), std::move(class_names), dim);
}

// ---------------------------------------------------------------------------
// Splitting

namespace {

// Largest-remainder apportionment of `total` across groups with the given
// quotas; each group is capped at caps[g].
std::vector<int> apportion(int total, const std::vector<double>& quotas, const std::vector<int>& caps) {
  std::vector<int> counts(quotas.size(), 0);
  int assigned = 0;
  for (std::size_t g = 0; g < quotas.size(); ++g) {
    counts[g] = std::min(caps[g], static_cast<int>(std::floor(quotas[g])));
    assigned += counts[g];
  }
  std::vector<std::size_t> order(quotas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return quotas[a] - std::floor(quotas[a]) > quotas[b] - std::floor(quotas[b]);
  });
  // Hand out the remainder in order of fractional part, cycling if caps bite.
  bool progress = true;
  while (assigned < total && progress) {
    progress = false;
    for (std::size_t g : order) {
      if (assigned >= total) break;
      if (counts[g] < caps[g]) {
        ++counts[g];
        ++assigned;
        progress = true;
      }
    }
  }
  return counts;
}

}  // namespace

DatasetSplit group_shuffle_split(const LabeledDataset& dataset, double test_fraction,
                                 double validation_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) throw InvalidArgument("test_fraction must lie in (0, 1)");
  if (!(validation_fraction >= 0.0 && validation_fraction < 1.0)) {
    throw InvalidArgument("validation_fraction must lie in [0, 1)");
  }
  const auto groups = dataset.indices_by_class();
  for (std::size_t c = 0; c < groups.size(); ++c) {
    if (groups[c].size() == 1) {
      throw InvalidArgument("class '" + dataset.class_names()[c] + "' has a single distribution");
    }
  }

  const int n = static_cast<int>(dataset.size());
  const std::size_t classes = groups.size();

  std::vector<double> test_quota(classes);
  std::vector<int> test_cap(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    test_quota[c] = static_cast<double>(groups[c].size()) * test_fraction;
    test_cap[c] = static_cast<int>(groups[c].size());
  }
  const int test_total = static_cast<int>(std::lround(n * test_fraction));
  const auto test_counts = apportion(test_total, test_quota, test_cap);

  std::vector<double> val_quota(classes);
  std::vector<int> val_cap(classes);
  int remaining = 0;
  for (std::size_t c = 0; c < classes; ++c) {
    const int left = static_cast<int>(groups[c].size()) - test_counts[c];
    remaining += left;
    val_quota[c] = left * validation_fraction;
    val_cap[c] = std::max(0, left - 1);
  }
  const int val_total = static_cast<int>(std::lround(remaining * validation_fraction));
  const auto val_counts = apportion(val_total, val_quota, val_cap);

  Rng rng = make_rng(seed, "split");
  std::vector<std::size_t> train_idx, test_idx, val_idx;
  for (std::size_t c = 0; c < classes; ++c) {
    std::vector<std::size_t> members = groups[c];
    std::shuffle(members.begin(), members.end(), rng);
    const auto t = static_cast<std::size_t>(test_counts[c]);
    const auto v = static_cast<std::size_t>(val_counts[c]);
    if (!members.empty() && members.size() <= t + v) {
      throw InvalidArgument("split leaves class '" + dataset.class_names()[c] + "' empty in train");
    }
    for (std::size_t m = 0; m < members.size(); ++m) {
      if (m < t) test_idx.push_back(members[m]);
      else if (m < t + v) val_idx.push_back(members[m]);
      else train_idx.push_back(members[m]);
    }
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());
  std::sort(val_idx.begin(), val_idx.end());
  return DatasetSplit{dataset.select(train_idx), dataset.select(test_idx), dataset.select(val_idx)};
}

}  // namespace groundml
