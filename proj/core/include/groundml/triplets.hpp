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
#ifndef GROUNDML_TRIPLETS_HPP_
#define GROUNDML_TRIPLETS_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "groundml/dataset.hpp"

namespace groundml {

// Distribution indices with label(i) == label(j) and label(j) != label(k).
struct Triplet {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  auto operator<=>(const Triplet&) const = default;
};

struct TripletSet {
  std::vector<Triplet> triplets;
  int t = 0;
  std::string source_dataset_id;

  std::size_t size() const { return triplets.size(); }
  bool empty() const { return triplets.empty(); }
};

enum class NeighborSource { wasserstein_euclidean, random };

std::string_view to_string(NeighborSource source);
NeighborSource parse_neighbor_source(std::string_view name);

// For every anchor j: up to t same-class neighbours i (excluding j) and up to
// t neighbours k from each other class, emitted as their Cartesian product.
// With wasserstein_euclidean, neighbours are the nearest under the pairwise
// Wasserstein matrix with Euclidean ground cost (computed once); with random
// they are drawn without replacement. Throws if a class present in the
// dataset has a single distribution.
TripletSet build_triplets(const LabeledDataset& dataset, int t, NeighborSource source,
                          std::uint64_t seed, unsigned threads = 1);

// Every label-consistent triplet.
TripletSet all_triplets(const LabeledDataset& dataset);

bool is_valid_triplet(const LabeledDataset& dataset, const Triplet& triplet);

// `i,j,k` columns holding distribution ids.
void write_triplets(const LabeledDataset& dataset, const TripletSet& set, std::ostream& out);

}  // namespace groundml

#endif  // GROUNDML_TRIPLETS_HPP_
