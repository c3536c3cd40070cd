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

#include "revsynth/truth_table.hpp"

#include <bit>
#include <cstdlib>

namespace revsynth {

TruthTable::TruthTable(int num_vars, std::vector<uint8_t> bits)
    : n_(num_vars), bits_(std::move(bits)) {
  if (n_ < 1 || n_ > kMaxTableVars) {
    throw WidthError("truth table must have 1 to 16 variables, got " +
                     std::to_string(n_));
  }
  if (bits_.size() != size_t(1) << n_) {
    throw WidthError("truth table over " + std::to_string(n_) +
                     " variables needs " + std::to_string(size_t(1) << n_) +
                     " entries, got " + std::to_string(bits_.size()));
  }
  for (uint8_t& b : bits_) {
    if (b > 1) throw Error("truth table entries must be 0 or 1");
  }
}

TruthTable TruthTable::constant(int num_vars, bool value) {
  if (num_vars < 1 || num_vars > kMaxTableVars) {
    throw WidthError("truth table must have 1 to 16 variables, got " +
                     std::to_string(num_vars));
  }
  return TruthTable(num_vars, std::vector<uint8_t>(size_t(1) << num_vars,
                                                   value ? 1 : 0));
}

TruthTable TruthTable::from_string(std::string_view text) {
  std::vector<uint8_t> bits;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    for (char c : text.substr(2)) {
      int digit;
      if (c >= '0' && c <= '9') digit = c - '0';
      else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
      else throw Error(std::string("invalid hex digit '") + c + "' in truth table");
      for (int k = 0; k < 4; ++k) bits.push_back(uint8_t((digit >> k) & 1));
    }
  } else {
    for (char c : text) {
      if (c == '0') bits.push_back(0);
      else if (c == '1') bits.push_back(1);
      else throw Error(std::string("invalid character '") + c + "' in truth table");
    }
  }
  if (bits.size() < 2 || !std::has_single_bit(bits.size())) {
    throw WidthError("truth table length must be a power of two >= 2, got " +
                     std::to_string(bits.size()));
  }
  return TruthTable(std::countr_zero(bits.size()), std::move(bits));
}

std::string TruthTable::to_binary_string() const {
  std::string out(bits_.size(), '0');
  for (size_t i = 0; i < bits_.size(); ++i) out[i] = char('0' + bits_[i]);
  return out;
}

std::string TruthTable::to_hex_string() const {
  if (n_ < 2) throw WidthError("hex truth-table form needs at least 2 variables");
  std::string out = "0x";
  for (size_t j = 0; j < bits_.size(); j += 4) {
    int digit = bits_[j] | (bits_[j + 1] << 1) | (bits_[j + 2] << 2) |
                (bits_[j + 3] << 3);
    out += "0123456789abcdef"[digit];
  }
  return out;
}

Spectrum walsh_hadamard(const TruthTable& f) {
  const uint32_t len = f.size();
  std::vector<int32_t> w(len);
  for (uint32_t x = 0; x < len; ++x) w[x] = f.bit(x) ? -1 : 1;
  for (uint32_t span = 1; span < len; span <<= 1) {
    for (uint32_t block = 0; block < len; block += span << 1) {
      for (uint32_t j = block; j < block + span; ++j) {
        const int32_t a = w[j];
        const int32_t b = w[j + span];
        w[j] = a + b;
        w[j + span] = a - b;
      }
    }
  }
  return Spectrum{f.num_vars(), std::move(w)};
}

bool is_bent(const TruthTable& f) {
  if (f.num_vars() % 2 != 0) return false;
  const int32_t flat = int32_t(1) << (f.num_vars() / 2);
  const Spectrum spec = walsh_hadamard(f);
  for (int32_t v : spec.values) {
    if (std::abs(v) != flat) return false;
  }
  return true;
}

TruthTable dual(const TruthTable& f) {
  if (!is_bent(f)) {
    throw NotBentError("dual is only defined for bent functions");
  }
  const Spectrum spec = walsh_hadamard(f);
  std::vector<uint8_t> bits(spec.values.size());
  for (size_t w = 0; w < bits.size(); ++w) bits[w] = spec.values[w] < 0;
  return TruthTable(f.num_vars(), std::move(bits));
}

TruthTable shift(const TruthTable& f, uint32_t s) {
  if (s >= f.size()) {
    throw WidthError("shift " + std::to_string(s) + " out of range for " +
                     std::to_string(f.num_vars()) + " variables");
  }
  std::vector<uint8_t> bits(f.size());
  for (uint32_t x = 0; x < f.size(); ++x) bits[x] = f.bit(x ^ s);
  return TruthTable(f.num_vars(), std::move(bits));
}

TruthTable mm_construct(const Permutation& pi, const TruthTable& h) {
  const int n = pi.num_bits();
  if (h.num_vars() != n) {
    throw WidthError("mm_construct width mismatch: pi on " + std::to_string(n) +
                     " bits, h on " + std::to_string(h.num_vars()) +
                     " variables");
  }
  if (2 * n > kMaxTableVars) {
    throw WidthError("mm_construct output exceeds 16 variables");
  }
  std::vector<uint8_t> bits(size_t(1) << (2 * n));
  for (uint32_t y = 0; y < pi.size(); ++y) {
    const uint32_t piy = pi(y);
    const uint8_t hy = h.bit(y);
    for (uint32_t x = 0; x < pi.size(); ++x) {
      bits[(y << n) | x] = uint8_t((std::popcount(x & piy) & 1) ^ hy);
    }
  }
  return TruthTable(2 * n, std::move(bits));
}

TruthTable mm_dual(const Permutation& pi, const TruthTable& h) {
  const int n = pi.num_bits();
  if (h.num_vars() != n) {
    throw WidthError("mm_dual width mismatch: pi on " + std::to_string(n) +
                     " bits, h on " + std::to_string(h.num_vars()) +
                     " variables");
  }
  if (2 * n > kMaxTableVars) {
    throw WidthError("mm_dual output exceeds 16 variables");
  }
  const Permutation inv = invert(pi);
  std::vector<uint8_t> bits(size_t(1) << (2 * n));
  for (uint32_t x = 0; x < pi.size(); ++x) {
    const uint32_t ix = inv(x);
    const uint8_t hx = h.bit(ix);
    for (uint32_t y = 0; y < pi.size(); ++y) {
      bits[(y << n) | x] = uint8_t((std::popcount(ix & y) & 1) ^ hx);
    }
  }
  return TruthTable(2 * n, std::move(bits));
}

}  // namespace revsynth
