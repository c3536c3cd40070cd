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

#include "revsynth/permutation.hpp"

#include <bit>
#include <sstream>

namespace revsynth {

namespace {

int log2_exact(size_t len) {
  if (len < 2 || !std::has_single_bit(len)) return -1;
  return std::countr_zero(len);
}

}  // namespace

Permutation::Permutation(std::vector<uint32_t> map) : map_(std::move(map)) {
  n_ = log2_exact(map_.size());
  if (n_ < 0 || n_ > kMaxTableVars) {
    throw WidthError("permutation length must be 2^n with 1 <= n <= 16, got " +
                     std::to_string(map_.size()) + " entries");
  }
  std::vector<bool> seen(map_.size(), false);
  for (uint32_t v : map_) {
    if (v >= map_.size() || seen[v]) {
      throw Error("permutation is not a bijection on {0,...," +
                  std::to_string(map_.size() - 1) + "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int num_bits) {
  if (num_bits < 1 || num_bits > kMaxTableVars) {
    throw WidthError("permutation width out of range: " +
                     std::to_string(num_bits));
  }
  std::vector<uint32_t> map(size_t(1) << num_bits);
  for (uint32_t i = 0; i < map.size(); ++i) map[i] = i;
  return Permutation(std::move(map));
}

Permutation Permutation::from_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<uint32_t> map;
  long long entry = 0;
  while (in >> entry) {
    if (entry < 0) throw Error("permutation entries must be non-negative");
    map.push_back(uint32_t(entry));
  }
  if (!in.eof()) throw Error("permutation contains a non-numeric token");
  return Permutation(std::move(map));
}

std::string Permutation::to_string() const {
  std::string out;
  for (uint32_t i = 0; i < map_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(map_[i]);
  }
  return out;
}

Permutation invert(const Permutation& pi) {
  std::vector<uint32_t> inv(pi.size());
  for (uint32_t i = 0; i < pi.size(); ++i) inv[pi(i)] = i;
  return Permutation(std::move(inv));
}

Permutation hwb(int n) {
  if (n < 1 || n > kMaxTableVars) {
    throw WidthError("hwb width out of range: " + std::to_string(n));
  }
  std::vector<uint32_t> map(size_t(1) << n);
  const uint32_t mask = uint32_t(map.size() - 1);
  for (uint32_t x = 0; x < map.size(); ++x) {
    const int r = std::popcount(x) % n;
    map[x] = r == 0 ? x : ((x >> r) | (x << (n - r))) & mask;
  }
  return Permutation(std::move(map));
}

}  // namespace revsynth
