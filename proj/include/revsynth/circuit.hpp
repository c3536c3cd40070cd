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

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "revsynth/errors.hpp"

namespace revsynth {

enum class GateKind { H, T, Tdg, S, Sdg, X, Z, CX, CZ, MCT, MCZ };

inline constexpr int kNumGateKinds = 11;

/// Lowercase name as used by the circuit text format ("h", "tdg", ...).
std::string_view gate_kind_name(GateKind kind);

struct Control {
  uint32_t qubit = 0;
  bool positive = true;

  bool operator==(const Control&) const = default;
};

/// One unitary gate over indexed qubits.
///
/// `target` is meaningful for every kind except MCZ, which is symmetric and
/// keeps its qubit set in `qubits` (sorted). MCT controls carry a polarity
/// and are kept sorted by qubit; CX and CZ hold their single positive
/// control as controls[0], with CZ normalized to control < target. All
/// qubit indices within a gate are distinct. Build gates through the
/// factories, which enforce these invariants (an MCT with zero controls
/// normalizes to X).
struct Gate {
  GateKind kind = GateKind::X;
  uint32_t target = 0;
  std::vector<Control> controls;
  std::vector<uint32_t> qubits;

  static Gate h(uint32_t q);
  static Gate t(uint32_t q);
  static Gate tdg(uint32_t q);
  static Gate s(uint32_t q);
  static Gate sdg(uint32_t q);
  static Gate x(uint32_t q);
  static Gate z(uint32_t q);
  static Gate cx(uint32_t control, uint32_t target);
  static Gate cz(uint32_t a, uint32_t b);
  static Gate mct(std::vector<Control> controls, uint32_t target);
  static Gate mcz(std::vector<uint32_t> qubits);

  /// Sorted list of every qubit the gate touches.
  std::vector<uint32_t> support() const;
  uint32_t max_qubit() const;

  bool operator==(const Gate&) const = default;
};

/// The adjoint of a single gate (T <-> Tdg, S <-> Sdg; the rest are
/// self-adjoint).
Gate adjoint(const Gate& g);

/// Ordered gate list over num_qubits lines; time runs left to right.
/// Circuits are purely unitary; measurement lives in the simulator.
/// global_phase_flip records an overall factor of -1 on the represented
/// operator (set by phase oracles of functions with a constant-1 term).
struct Circuit {
  uint32_t num_qubits = 1;
  std::vector<Gate> gates;
  bool global_phase_flip = false;

  Circuit() = default;
  explicit Circuit(uint32_t n) : num_qubits(n) {}
  Circuit(uint32_t n, std::vector<Gate> gs, bool phase_flip = false)
      : num_qubits(n), gates(std::move(gs)), global_phase_flip(phase_flip) {
    for (const Gate& g : gates) check_bounds(g);
  }

  /// Appends one gate, checking indices against num_qubits.
  void push(Gate g);

  /// Concatenates another circuit of the same width; phase flags xor.
  void append(const Circuit& other);

  bool operator==(const Circuit&) const = default;

 private:
  void check_bounds(const Gate& g) const;
};

struct GateStats {
  uint64_t total_gates = 0;
  uint64_t t_count = 0;  // T plus Tdg
  uint64_t h_count = 0;
  uint64_t cnot_count = 0;
  uint64_t mct_count = 0;
  uint64_t mcz_count = 0;
  uint32_t num_qubits = 0;
  std::array<uint64_t, kNumGateKinds> per_kind{};
};

/// Gates reversed, each replaced by its adjoint. An involution.
Circuit dagger(const Circuit& c);

/// compute, then action, then dagger(compute). Widths must match.
Circuit compute_uncompute(const Circuit& compute, const Circuit& action);

GateStats stats(const Circuit& c);

/// Peephole simplification: repeatedly cancels mutually-adjoint gate pairs
/// acting on identical qubit sets and polarities, commuting across gates
/// with disjoint support, until a fixed point. Only exact inverse pairs are
/// removed, so the represented unitary is unchanged and the gate count
/// never grows.
Circuit simplify(const Circuit& c);

/// Rewrites qubit indices: a gate on qubit q moves to new_index[q].
/// new_index must be injective on the qubits actually used.
Circuit remap(const Circuit& c, const std::vector<uint32_t>& new_index,
              uint32_t new_num_qubits);

}  // namespace revsynth
