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

#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/esop.hpp"
#include "revsynth/permutation.hpp"
#include "revsynth/truth_table.hpp"

namespace revsynth {

inline constexpr int kMaxSynthBits = 12;

enum class SynthStrategy { Tbs, Dbs };

/// Transformation-based synthesis (unidirectional, output side): walks the
/// truth table row by row, appending MCT corrections that fix each row
/// without disturbing earlier ones, and emits the collected gates in
/// reverse. The result is an MCT-only circuit whose extracted permutation
/// equals pi. n <= 12.
Circuit tbs(const Permutation& pi);

/// Decomposition-based synthesis: factors pi through Young subgroups, one
/// variable at a time (ascending), into single-target gates whose control
/// functions come from a 2-coloring of the pair-matching cycles at that
/// variable; each control function is emitted as MCT gates via its PPRM.
/// Same extraction contract as tbs. n <= 12.
Circuit dbs(const Permutation& pi);

/// Bennett embedding |x>|y> -> |x>|y xor f(x)> on n + m qubits: one MCT per
/// PPRM cube of each output, targeting line n + j. n + m <= 20.
Circuit esop_synth(const std::vector<TruthTable>& outputs);

/// Appends one MCT per cube (polarities honored; a mask-0 cube becomes a
/// plain X) targeting `target`.
void append_esop_gates(Circuit& c, const Esop& esop, uint32_t target);

/// Diagonal U_f = sum_x (-1)^f(x) |x><x| built from one gate per PPRM cube:
/// 1-variable cubes become Z, 2-variable CZ, larger MCZ. A constant-1 cube
/// sets the circuit's global_phase_flip instead of emitting a gate, so the
/// phase function is realized exactly and never silently truncated. n <= 16.
Circuit phase_oracle(const TruthTable& f);

/// Dispatches to the chosen strategy, then simplifies.
Circuit permutation_oracle(const Permutation& pi, SynthStrategy strategy);

}  // namespace revsynth
