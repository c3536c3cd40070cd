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
#include <string>
#include <string_view>
#include <vector>

#include "revsynth/errors.hpp"

namespace revsynth {

inline constexpr int kMaxTableVars = 16;

/// Bijection on {0, ..., 2^n - 1}, 1 <= n <= 16. Immutable once built.
class Permutation {
 public:
  /// `map` must have power-of-two length and contain every value in
  /// {0, ..., len - 1} exactly once.
  explicit Permutation(std::vector<uint32_t> map);

  static Permutation identity(int num_bits);

  /// Whitespace-separated decimal entries, e.g. "0 2 3 5 7 1 4 6".
  static Permutation from_string(std::string_view text);

  int num_bits() const { return n_; }
  uint32_t size() const { return uint32_t(map_.size()); }
  uint32_t operator()(uint32_t x) const { return map_[x]; }
  const std::vector<uint32_t>& map() const { return map_; }

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  int n_;
  std::vector<uint32_t> map_;
};

/// pi^{-1}: invert(pi)(pi(x)) == x for every x.
Permutation invert(const Permutation& pi);

/// Hidden-weighted-bit permutation: x rotated right by popcount(x) over n
/// bits. 1 <= n <= 16.
Permutation hwb(int n);

}  // namespace revsynth
