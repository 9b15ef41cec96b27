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

#ifndef GROUNDML_RANDOM_HPP_
#define GROUNDML_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace groundml {

// Every random decision in the library draws from a generator seeded by
// derive_seed(run_seed, "<stream>", index). Streams in use: "synth",
// "split", "init", "batch-shuffle", "triplets".
std::uint64_t derive_seed(std::uint64_t base, std::string_view stream, std::uint64_t index = 0);

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t base, std::string_view stream, std::uint64_t index = 0) {
  return Rng(derive_seed(base, stream, index));
}

// 64-bit FNV-1a; used for dataset fingerprints and artifact hashes.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state = 0xcbf29ce484222325ULL);

}  // namespace groundml

#endif  // GROUNDML_RANDOM_HPP_
