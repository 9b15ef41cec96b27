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
#include "groundml/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "csv.hpp"
#include "groundml/random.hpp"

namespace groundml {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::vector<std::string> default_feature_names(Index dimension) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(dimension));
  for (Index f = 0; f < dimension; ++f) names.push_back("f" + std::to_string(f));
  return names;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

void write_row(std::ostream& out, const auto& values) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '\n';
}

}  // namespace

void write_params(const LowRankMahalanobis& params, const std::vector<std::string>& feature_names,
                  const std::filesystem::path& path) {
  const auto names = feature_names.empty() ? default_feature_names(params.dimension()) : feature_names;
  if (static_cast<Index>(names.size()) != params.dimension()) {
    throw InvalidArgument("feature name count differs from parameter dimension");
  }
  auto out = open_out(path);
  write_row(out, names);
  const Matrix& w = params.weights();
  for (Index r = 0; r < w.rows(); ++r) {
    for (Index c = 0; c < w.cols(); ++c) out << (c ? "," : "") << format_double(w(r, c));
    out << '\n';
  }
}

LoadedParams load_params(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  std::size_t line_no = 0;
  if (!csv::next_line(in, line, line_no)) throw ParseError(path.string(), 1, "empty file");
  LoadedParams out;
  for (auto f : csv::split(line)) out.feature_names.emplace_back(csv::trim(f));
  const std::size_t dim = out.feature_names.size();
  std::vector<double> values;
  std::size_t rows = 0;
  while (csv::next_line(in, line, line_no)) {
    if (csv::trim(line).empty()) continue;
    const auto fields = csv::split(line);
    if (fields.size() != dim) {
      throw ParseError(path.string(), line_no,
                       "expected " + std::to_string(dim) + " columns, found " + std::to_string(fields.size()));
    }
    for (auto f : fields) {
      const auto v = csv::parse_double(f);
      if (!v) throw ParseError(path.string(), line_no, "non-numeric entry '" + std::string(f) + "'");
      values.push_back(*v);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(path.string(), line_no, "no parameter rows");
  Matrix w = Eigen::Map<const RowMatrix>(values.data(), static_cast<Index>(rows), static_cast<Index>(dim));
  out.params = LowRankMahalanobis(std::move(w));
  return out;
}

void write_mahalanobis(const MahalanobisMatrix& m, const std::vector<std::string>& feature_names,
                       const std::filesystem::path& path) {
  const auto names = feature_names.empty() ? default_feature_names(m.m.rows()) : feature_names;
  auto out = open_out(path);
  out << "feature";
  for (const auto& n : names) out << ',' << n;
  out << '\n';
  for (Index r = 0; r < m.m.rows(); ++r) {
    out << names[static_cast<std::size_t>(r)];
    for (Index c = 0; c < m.m.cols(); ++c) out << ',' << format_double(m.m(r, c));
    out << '\n';
  }
}

void write_importance(const std::vector<FeatureImportance>& ranking, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "rank,feature,importance\n";
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    out << r + 1 << ',' << ranking[r].name << ',' << format_double(ranking[r].importance) << '\n';
  }
}

void write_distance_matrix(const DistanceMatrix& dm, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "id";
  for (const auto& id : dm.ids) out << ',' << id;
  out << '\n';
  for (Index r = 0; r < dm.values.rows(); ++r) {
    out << dm.ids[static_cast<std::size_t>(r)];
    for (Index c = 0; c < dm.values.cols(); ++c) out << ',' << format_double(dm.values(r, c));
    out << '\n';
  }
}

DistanceMatrix load_distance_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  std::size_t line_no = 0;
  if (!csv::next_line(in, line, line_no)) throw ParseError(path.string(), 1, "empty file");
  DistanceMatrix dm;
  const auto header = csv::split(line);
  for (std::size_t c = 1; c < header.size(); ++c) dm.ids.emplace_back(csv::trim(header[c]));
  const auto n = static_cast<Index>(dm.ids.size());
  dm.values = Matrix::Zero(n, n);
  Index r = 0;
  while (csv::next_line(in, line, line_no)) {
    if (csv::trim(line).empty()) continue;
    const auto fields = csv::split(line);
    if (static_cast<Index>(fields.size()) != n + 1 || r >= n) {
      throw ParseError(path.string(), line_no, "malformed distance matrix row");
    }
    if (csv::trim(fields[0]) != dm.ids[static_cast<std::size_t>(r)]) {
      throw ParseError(path.string(), line_no, "row id does not match header order");
    }
    for (Index c = 0; c < n; ++c) {
      const auto v = csv::parse_double(fields[static_cast<std::size_t>(c + 1)]);
      if (!v) throw ParseError(path.string(), line_no, "non-numeric distance");
      dm.values(r, c) = *v;
    }
    ++r;
  }
  if (r != n) throw ParseError(path.string(), line_no, "distance matrix has too few rows");
  dm.validate();
  return dm;
}

void write_loss_trace(double initial_loss, const std::vector<double>& trace,
                      const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "epoch,loss\n0," << format_double(initial_loss) << '\n';
  for (std::size_t e = 0; e < trace.size(); ++e) out << e + 1 << ',' << format_double(trace[e]) << '\n';
}

void write_benchmark(const BenchmarkResult& result, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "split,accuracy\n";
  for (std::size_t s = 0; s < result.accuracies.size(); ++s) {
    out << s << ',' << format_double(result.accuracies[s]) << '\n';
  }
  out << "mean," << format_double(result.mean) << '\n';
  out << "variance," << format_double(result.variance) << '\n';
}

void write_clusters(const std::vector<std::string>& ids, const std::vector<int>& clusters,
                    const std::filesystem::path& path) {
  if (ids.size() != clusters.size()) throw InvalidArgument("one cluster per id is required");
  auto out = open_out(path);
  out << "id,cluster\n";
  for (std::size_t i = 0; i < ids.size(); ++i) out << ids[i] << ',' << clusters[i] << '\n';
}

std::vector<std::string> load_feature_names(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  while (csv::next_line(in, line, line_no)) {
    for (auto f : csv::split(line)) {
      const auto name = csv::trim(f);
      if (!name.empty()) names.emplace_back(name);
    }
  }
  return names;
}

std::string hash_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(buffer.str());
  return os.str();
}

}  // namespace groundml
