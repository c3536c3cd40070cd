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

#include "revsynth/circuit.hpp"

#include <algorithm>

namespace revsynth {

namespace {

void check_distinct(const std::vector<uint32_t>& sorted_qubits,
                    const char* what) {
  for (size_t i = 1; i < sorted_qubits.size(); ++i) {
    if (sorted_qubits[i] == sorted_qubits[i - 1]) {
      throw Error(std::string("duplicate qubit q") +
                  std::to_string(sorted_qubits[i]) + " in " + what);
    }
  }
}

Gate single(GateKind kind, uint32_t q) {
  Gate g;
  g.kind = kind;
  g.target = q;
  return g;
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::MCT: return "mct";
    case GateKind::MCZ: return "mcz";
  }
  return "?";
}

Gate Gate::h(uint32_t q) { return single(GateKind::H, q); }
Gate Gate::t(uint32_t q) { return single(GateKind::T, q); }
Gate Gate::tdg(uint32_t q) { return single(GateKind::Tdg, q); }
Gate Gate::s(uint32_t q) { return single(GateKind::S, q); }
Gate Gate::sdg(uint32_t q) { return single(GateKind::Sdg, q); }
Gate Gate::x(uint32_t q) { return single(GateKind::X, q); }
Gate Gate::z(uint32_t q) { return single(GateKind::Z, q); }

Gate Gate::cx(uint32_t control, uint32_t target) {
  if (control == target) throw Error("cx control equals target");
  Gate g;
  g.kind = GateKind::CX;
  g.target = target;
  g.controls = {Control{control, true}};
  return g;
}

Gate Gate::cz(uint32_t a, uint32_t b) {
  if (a == b) throw Error("cz qubits must be distinct");
  Gate g;
  g.kind = GateKind::CZ;
  g.controls = {Control{std::min(a, b), true}};
  g.target = std::max(a, b);
  return g;
}

Gate Gate::mct(std::vector<Control> controls, uint32_t target) {
  if (controls.empty()) return x(target);
  Gate g;
  g.kind = GateKind::MCT;
  g.target = target;
  g.controls = std::move(controls);
  std::sort(g.controls.begin(), g.controls.end(),
            [](const Control& a, const Control& b) { return a.qubit < b.qubit; });
  std::vector<uint32_t> qs;
  qs.reserve(g.controls.size() + 1);
  for (const Control& c : g.controls) qs.push_back(c.qubit);
  qs.push_back(target);
  std::sort(qs.begin(), qs.end());
  check_distinct(qs, "mct");
  return g;
}

Gate Gate::mcz(std::vector<uint32_t> qubits) {
  if (qubits.empty()) throw Error("mcz needs at least one qubit");
  Gate g;
  g.kind = GateKind::MCZ;
  g.qubits = std::move(qubits);
  std::sort(g.qubits.begin(), g.qubits.end());
  check_distinct(g.qubits, "mcz");
  return g;
}

std::vector<uint32_t> Gate::support() const {
  std::vector<uint32_t> qs;
  if (kind == GateKind::MCZ) {
    qs = qubits;
  } else {
    qs.reserve(controls.size() + 1);
    for (const Control& c : controls) qs.push_back(c.qubit);
    qs.push_back(target);
    std::sort(qs.begin(), qs.end());
  }
  return qs;
}

uint32_t Gate::max_qubit() const {
  if (kind == GateKind::MCZ) return qubits.back();
  uint32_t m = target;
  for (const Control& c : controls) m = std::max(m, c.qubit);
  return m;
}

Gate adjoint(const Gate& g) {
  Gate a = g;
  if (g.kind == GateKind::T) a.kind = GateKind::Tdg;
  else if (g.kind == GateKind::Tdg) a.kind = GateKind::T;
  else if (g.kind == GateKind::S) a.kind = GateKind::Sdg;
  else if (g.kind == GateKind::Sdg) a.kind = GateKind::S;
  return a;
}

void Circuit::check_bounds(const Gate& g) const {
  if (g.max_qubit() >= num_qubits) {
    throw WidthError("gate touches qubit q" + std::to_string(g.max_qubit()) +
                     " but the circuit has " + std::to_string(num_qubits) +
                     " qubits");
  }
}

void Circuit::push(Gate g) {
  check_bounds(g);
  gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits != num_qubits) {
    throw WidthError("cannot concatenate circuits of widths " +
                     std::to_string(num_qubits) + " and " +
                     std::to_string(other.num_qubits));
  }
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  global_phase_flip = global_phase_flip != other.global_phase_flip;
}

Circuit dagger(const Circuit& c) {
  Circuit out(c.num_qubits);
  out.global_phase_flip = c.global_phase_flip;
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    out.gates.push_back(adjoint(*it));
  }
  return out;
}

Circuit compute_uncompute(const Circuit& compute, const Circuit& action) {
  if (compute.num_qubits != action.num_qubits) {
    throw WidthError("compute/action width mismatch: " +
                     std::to_string(compute.num_qubits) + " vs " +
                     std::to_string(action.num_qubits));
  }
  Circuit out = compute;
  out.append(action);
  out.append(dagger(compute));
  return out;
}

GateStats stats(const Circuit& c) {
  GateStats st;
  st.num_qubits = c.num_qubits;
  st.total_gates = c.gates.size();
  for (const Gate& g : c.gates) {
    st.per_kind[size_t(g.kind)]++;
    switch (g.kind) {
      case GateKind::T:
      case GateKind::Tdg: st.t_count++; break;
      case GateKind::H: st.h_count++; break;
      case GateKind::CX: st.cnot_count++; break;
      case GateKind::MCT: st.mct_count++; break;
      case GateKind::MCZ: st.mcz_count++; break;
      default: break;
    }
  }
  return st;
}

namespace {

bool disjoint_support(const std::vector<uint32_t>& a,
                      const std::vector<uint32_t>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

}  // namespace

Circuit simplify(const Circuit& c) {
  std::vector<Gate> gs = c.gates;
  std::vector<std::vector<uint32_t>> supports;
  supports.reserve(gs.size());
  for (const Gate& g : gs) supports.push_back(g.support());

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < gs.size(); ++i) {
      // Find the first later gate sharing a qubit with gs[i]; everything in
      // between commutes past gs[i] by disjointness.
      for (size_t j = i + 1; j < gs.size(); ++j) {
        if (disjoint_support(supports[i], supports[j])) continue;
        if (adjoint(gs[i]) == gs[j]) {
          gs.erase(gs.begin() + j);
          gs.erase(gs.begin() + i);
          supports.erase(supports.begin() + j);
          supports.erase(supports.begin() + i);
          changed = true;
        }
        break;
      }
      if (changed) break;
    }
  }
  return Circuit(c.num_qubits, std::move(gs), c.global_phase_flip);
}

Circuit remap(const Circuit& c, const std::vector<uint32_t>& new_index,
              uint32_t new_num_qubits) {
  Circuit out(new_num_qubits);
  out.global_phase_flip = c.global_phase_flip;
  auto lookup = [&](uint32_t q) {
    if (q >= new_index.size()) {
      throw WidthError("remap table does not cover qubit q" +
                       std::to_string(q));
    }
    return new_index[q];
  };
  for (const Gate& g : c.gates) {
    Gate ng = g;
    if (g.kind == GateKind::MCZ) {
      for (uint32_t& q : ng.qubits) q = lookup(q);
      std::sort(ng.qubits.begin(), ng.qubits.end());
    } else {
      ng.target = lookup(g.target);
      for (Control& ctrl : ng.controls) ctrl.qubit = lookup(ctrl.qubit);
      std::sort(ng.controls.begin(), ng.controls.end(),
                [](const Control& a, const Control& b) {
                  return a.qubit < b.qubit;
                });
      if (g.kind == GateKind::CZ && ng.controls[0].qubit > ng.target) {
        std::swap(ng.controls[0].qubit, ng.target);
      }
    }
    out.push(std::move(ng));
  }
  return out;
}

}  // namespace revsynth
