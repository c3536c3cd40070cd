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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/permutation.hpp"
#include "revsynth/truth_table.hpp"

namespace revsynth {

inline constexpr uint32_t kMaxSimQubits = 22;

/// Dense 2^n complex amplitude vector; index b encodes qubit 0 as bit 0.
struct StateVector {
  uint32_t num_qubits = 0;
  std::vector<std::complex<double>> amps;

  /// |0...0>
  explicit StateVector(uint32_t n);

  static StateVector basis(uint32_t num_qubits, uint64_t index);

  size_t size() const { return amps.size(); }
  double norm_sqr() const;
};

/// Applies one gate in place.
void apply_gate(StateVector& state, const Gate& g);

/// Applies every gate in order (plus the circuit's global phase flag).
/// Widths must match.
StateVector run(const Circuit& c, const StateVector& initial);
StateVector run(const Circuit& c, uint64_t basis_index = 0);

/// Samples one outcome from |amp|^2 using the SplitMix64 stream for `seed`;
/// a fixed seed always gives the same outcome.
uint64_t measure_all(const StateVector& state, uint64_t seed);

struct Histogram {
  uint32_t num_qubits = 0;
  uint64_t shots = 0;
  uint64_t seed = 0;
  std::map<uint64_t, uint64_t> counts;  // outcome -> count, ascending keys
};

/// `shots` independent draws from |amp|^2, reproducible per seed.
Histogram sample_shots(const StateVector& state, uint64_t shots,
                       uint64_t seed);

/// CSV with header "outcome,count,probability"; outcomes are n-character
/// bit strings with qubit 0 as the rightmost character. Rows appear in
/// ascending outcome order; zero-count outcomes are omitted.
std::string histogram_to_csv(const Histogram& h);
Histogram histogram_from_csv(std::string_view text);

struct NoiseConfig {
  double p1 = 0.0;  // depolarizing probability per 1-qubit gate
  double p2 = 0.0;  // per gate touching two or more qubits
};

/// One stochastic trajectory: after each gate, each touched qubit suffers a
/// uniformly random non-identity Pauli with the configured probability;
/// then measure_all on the same stream. With p1 == p2 == 0 the outcome is
/// bit-identical to measure_all(run(c), seed).
uint64_t run_noisy(const Circuit& c, const NoiseConfig& noise, uint64_t seed);

/// Simulates every basis state (n <= 16) and returns the induced map.
/// Requires each output to be a basis state (one amplitude with
/// |amp| >= 1 - 1e-9); throws NotClassicalError / NotBijectiveError.
Permutation extract_permutation(const Circuit& c);

/// Simulates every basis state (n <= 16); requires each to map to itself
/// with phase +-1 within 1e-9, and returns f with (-1)^f(x) the observed
/// sign. Throws NotDiagonalError.
TruthTable extract_phase_function(const Circuit& c);

/// Dense square complex matrix (row-major).
class Matrix {
 public:
  explicit Matrix(size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(size_t dim);

  size_t dim() const { return dim_; }
  std::complex<double>& at(size_t row, size_t col) {
    return data_[row * dim_ + col];
  }
  const std::complex<double>& at(size_t row, size_t col) const {
    return data_[row * dim_ + col];
  }

 private:
  size_t dim_;
  std::vector<std::complex<double>> data_;
};

/// Column b is run(c, |b>); n <= 10.
Matrix build_unitary(const Circuit& c);

/// Equality up to global phase: |tr(U^dagger V)| >= dim - tol.
bool unitary_equiv(const Matrix& u, const Matrix& v, double tol);

}  // namespace revsynth
