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
#include <vector>

#include "revsynth/truth_table.hpp"

namespace revsynth {

/// Product term: variables in positive_mask appear uncomplemented, those
/// in negative_mask complemented. The masks never overlap.
struct Cube {
  uint32_t positive_mask = 0;
  uint32_t negative_mask = 0;

  bool evaluate(uint32_t input) const {
    return (input & positive_mask) == positive_mask &&
           (input & negative_mask) == 0;
  }

  bool operator==(const Cube&) const = default;
};

/// Exclusive sum of products: XOR over cube evaluations.
struct Esop {
  int num_vars = 0;
  std::vector<Cube> cubes;

  bool evaluate(uint32_t input) const {
    bool value = false;
    for (const Cube& c : cubes) value ^= c.evaluate(input);
    return value;
  }
};

/// Positive-polarity Reed-Muller form computed by the fast Moebius
/// transform; every cube has negative_mask == 0, cubes are listed in
/// ascending mask order, and evaluation reproduces f on every input.
Esop pprm(const TruthTable& f);

}  // namespace revsynth
