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
#include "groundml/triplets.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>

#include "groundml/eval.hpp"
#include "groundml/random.hpp"

namespace groundml {

std::string_view to_string(NeighborSource source) {
  return source == NeighborSource::random ? "random" : "wasserstein_euclidean";
}

NeighborSource parse_neighbor_source(std::string_view name) {
  if (name == "wasserstein_euclidean") return NeighborSource::wasserstein_euclidean;
  if (name == "random") return NeighborSource::random;
  throw InvalidArgument("unknown neighbor source '" + std::string(name) + "'");
}

bool is_valid_triplet(const LabeledDataset& dataset, const Triplet& t) {
  const std::size_t n = dataset.size();
  if (t.i >= n || t.j >= n || t.k >= n || t.i == t.j) return false;
  return dataset[t.i].label == dataset[t.j].label && dataset[t.j].label != dataset[t.k].label;
}

namespace {

// Up to `t` members of `candidates`: the nearest to the anchor under `dist`
// (ties by index) or a uniform sample without replacement.
std::vector<std::size_t> pick_neighbors(std::vector<std::size_t> candidates, std::size_t t,
                                        const Matrix* dist, std::size_t anchor, Rng& rng) {
  if (dist != nullptr) {
    std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return (*dist)(anchor, a) < (*dist)(anchor, b);
    });
  } else {
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  if (candidates.size() > t) candidates.resize(t);
  return candidates;
}

}  // namespace

TripletSet build_triplets(const LabeledDataset& dataset, int t, NeighborSource source,
                          std::uint64_t seed, unsigned threads) {
  if (t < 1) throw InvalidArgument("neighbor parameter t must be positive");
  const auto groups = dataset.indices_by_class();
  for (std::size_t c = 0; c < groups.size(); ++c) {
    if (groups[c].size() == 1) {
      throw InvalidArgument("class '" + dataset.class_names()[c] +
                            "' has a single distribution; no same-class neighbour exists");
    }
  }

  Matrix distances;
  if (source == NeighborSource::wasserstein_euclidean) {
    distances = pairwise_wasserstein(dataset, BaselineMetric::euclidean, threads).values;
  }
  const Matrix* dist = source == NeighborSource::wasserstein_euclidean ? &distances : nullptr;

  TripletSet out;
  out.t = t;
  out.source_dataset_id = dataset.fingerprint();
  const auto budget = static_cast<std::size_t>(t);
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    Rng rng = make_rng(seed, "triplets", j);
    const int label = dataset[j].label;

    std::vector<std::size_t> same;
    for (std::size_t i : groups[label]) {
      if (i != j) same.push_back(i);
    }
    const auto positives = pick_neighbors(std::move(same), budget, dist, j, rng);

    std::vector<std::size_t> negatives;
    for (std::size_t c = 0; c < groups.size(); ++c) {
      if (static_cast<int>(c) == label) continue;
      const auto picked = pick_neighbors(groups[c], budget, dist, j, rng);
      negatives.insert(negatives.end(), picked.begin(), picked.end());
    }
    for (std::size_t i : positives) {
      for (std::size_t k : negatives) out.triplets.push_back(Triplet{i, j, k});
    }
  }
  return out;
}

TripletSet all_triplets(const LabeledDataset& dataset) {
  TripletSet out;
  out.t = static_cast<int>(dataset.size());
  out.source_dataset_id = dataset.fingerprint();
  const std::size_t n = dataset.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || dataset[i].label != dataset[j].label) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (dataset[k].label != dataset[j].label) out.triplets.push_back(Triplet{i, j, k});
      }
    }
  }
  return out;
}

void write_triplets(const LabeledDataset& dataset, const TripletSet& set, std::ostream& out) {
  out << "i,j,k\n";
  for (const auto& t : set.triplets) {
    out << dataset[t.i].id << ',' << dataset[t.j].id << ',' << dataset[t.k].id << '\n';
  }
}

}  // namespace groundml
