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
#include "revsynth/permutation.hpp"

namespace revsynth {

/// Complete single-output Boolean function f : B^n -> B, 1 <= n <= 16,
/// stored as all 2^n values. Input index b encodes variable x1 at bit 0
/// (least significant), x2 at bit 1, and so on. Immutable once built.
class TruthTable {
 public:
  /// `bits` must have length exactly 2^num_vars, entries 0 or 1.
  TruthTable(int num_vars, std::vector<uint8_t> bits);

  static TruthTable constant(int num_vars, bool value);

  /// Accepts a plain '0'/'1' string where character i is f(i), or a
  /// "0x"-prefixed hex string where digit j covers f(4j)..f(4j+3) with
  /// f(4j) as the digit's least significant bit.
  static TruthTable from_string(std::string_view text);

  int num_vars() const { return n_; }
  uint32_t size() const { return uint32_t(bits_.size()); }
  bool bit(uint32_t index) const { return bits_[index] != 0; }
  const std::vector<uint8_t>& bits() const { return bits_; }

  std::string to_binary_string() const;
  std::string to_hex_string() const;  // needs n >= 2 (whole hex digits)

  bool operator==(const TruthTable&) const = default;

 private:
  int n_;
  std::vector<uint8_t> bits_;
};

/// Walsh-Hadamard spectrum: values[w] = sum_x (-1)^(f(x) xor <w,x>).
/// Satisfies Parseval's identity sum_w values[w]^2 == 2^(2n).
struct Spectrum {
  int num_vars = 0;
  std::vector<int32_t> values;
};

/// Fast in-place Walsh-Hadamard transform of (-1)^f; O(n 2^n).
Spectrum walsh_hadamard(const TruthTable& f);

/// True iff n is even and |W(w)| == 2^(n/2) for every w. Odd n is never
/// bent.
bool is_bent(const TruthTable& f);

/// Dual bent function: W_f(w) = 2^(n/2) * (-1)^(dual(f)(w)). An involution
/// on bent functions. Throws NotBentError when f is not bent.
TruthTable dual(const TruthTable& f);

/// g(x) = f(x xor s). Throws WidthError when s is out of range.
TruthTable shift(const TruthTable& f, uint32_t s);

/// Maiorana-McFarland construction over 2n variables:
/// f(x, y) = <x, pi(y)> xor h(y), with x on index bits 0..n-1 and y on
/// bits n..2n-1. The result is always bent.
TruthTable mm_construct(const Permutation& pi, const TruthTable& h);

/// Closed-form dual <pi^{-1}(x), y> xor h(pi^{-1}(x)); equals
/// dual(mm_construct(pi, h)) exactly.
TruthTable mm_dual(const Permutation& pi, const TruthTable& h);

}  // namespace revsynth
