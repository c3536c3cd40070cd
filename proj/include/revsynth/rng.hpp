// Copyright 2026 The revsynth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace revsynth {

/// SplitMix64: the deterministic generator behind every seeded operation
/// (measurement, shot sampling, noise trajectories).
///
/// Draw i is mix64(seed + (i + 1) * 0x9E3779B97F4A7C15), i.e. a fixed
/// avalanche function applied to a counter, so sequences are identical on
/// every platform and independent draws can be reasoned about per index.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound) by modulo reduction; the bias is negligible for
  /// the tiny bounds used here (Pauli choice, shuffles).
  uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

 private:
  uint64_t state_;
};

}  // namespace revsynth
