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

#include "revsynth/esop.hpp"

namespace revsynth {

Esop pprm(const TruthTable& f) {
  std::vector<uint8_t> rm = f.bits();
  const uint32_t len = uint32_t(rm.size());
  // Fast Moebius transform: rm[m] becomes the coefficient of the monomial
  // prod_{i in m} x_i in the ring sum expansion of f.
  for (uint32_t bit = 1; bit < len; bit <<= 1) {
    for (uint32_t x = 0; x < len; ++x) {
      if (x & bit) rm[x] ^= rm[x ^ bit];
    }
  }
  Esop esop{f.num_vars(), {}};
  for (uint32_t m = 0; m < len; ++m) {
    if (rm[m]) esop.cubes.push_back(Cube{m, 0});
  }
  return esop;
}

}  // namespace revsynth
