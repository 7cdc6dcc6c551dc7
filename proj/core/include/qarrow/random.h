// Copyright 2026 The qarrow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QARROW_RANDOM_H
#define QARROW_RANDOM_H

#include <cstdint>
#include <random>

namespace qarrow {

/// Random stream used by every sampler. One stream per trajectory.
using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of trajectory `index` in an ensemble. Depends only on the pair, so
/// ensembles can be split across workers in any order.
constexpr uint64_t derive_seed(uint64_t master_seed, uint64_t index) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Uniform double in the open interval (0, 1), platform independent.
inline double uniform_open01(Rng &rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal deviate, platform independent.
double standard_normal(Rng &rng);

}  // namespace qarrow

#endif
