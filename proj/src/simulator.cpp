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

#include "revsynth/simulator.hpp"

#include <cmath>
#include <cstdio>

#include "revsynth/rng.hpp"

namespace revsynth {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kBasisTol = 1e-9;

using Complex = std::complex<double>;

uint64_t control_masks(const std::vector<Control>& controls, uint64_t& neg) {
  uint64_t pos = 0;
  neg = 0;
  for (const Control& c : controls) {
    (c.positive ? pos : neg) |= uint64_t(1) << c.qubit;
  }
  return pos;
}

void apply_phase_on_mask(StateVector& st, uint64_t mask, Complex phase) {
  for (size_t i = 0; i < st.amps.size(); ++i) {
    if ((i & mask) == mask) st.amps[i] *= phase;
  }
}

uint64_t sample_index(const StateVector& st, SplitMix64& rng) {
  const double u = rng.next_double();
  double acc = 0.0;
  for (size_t i = 0; i < st.amps.size(); ++i) {
    acc += std::norm(st.amps[i]);
    if (u < acc) return i;
  }
  return st.amps.size() - 1;  // u beyond accumulated norm (rounding)
}

void pauli_x(StateVector& st, uint32_t q) {
  const uint64_t bit = uint64_t(1) << q;
  for (size_t i = 0; i < st.amps.size(); ++i) {
    if (!(i & bit)) std::swap(st.amps[i], st.amps[i | bit]);
  }
}

void pauli_y(StateVector& st, uint32_t q) {
  const uint64_t bit = uint64_t(1) << q;
  const Complex im(0.0, 1.0);
  for (size_t i = 0; i < st.amps.size(); ++i) {
    if (!(i & bit)) {
      const Complex a0 = st.amps[i];
      const Complex a1 = st.amps[i | bit];
      st.amps[i] = -im * a1;
      st.amps[i | bit] = im * a0;
    }
  }
}

void pauli_z(StateVector& st, uint32_t q) {
  apply_phase_on_mask(st, uint64_t(1) << q, Complex(-1.0, 0.0));
}

}  // namespace

StateVector::StateVector(uint32_t n) : num_qubits(n) {
  if (n < 1 || n > kMaxSimQubits) {
    throw WidthError("state vector supports 1 to " +
                     std::to_string(kMaxSimQubits) + " qubits, got " +
                     std::to_string(n));
  }
  amps.assign(size_t(1) << n, Complex(0.0, 0.0));
  amps[0] = 1.0;
}

StateVector StateVector::basis(uint32_t num_qubits, uint64_t index) {
  StateVector st(num_qubits);
  if (index >= st.amps.size()) {
    throw WidthError("basis index " + std::to_string(index) +
                     " out of range for " + std::to_string(num_qubits) +
                     " qubits");
  }
  st.amps[0] = 0.0;
  st.amps[index] = 1.0;
  return st;
}

double StateVector::norm_sqr() const {
  double acc = 0.0;
  for (const Complex& a : amps) acc += std::norm(a);
  return acc;
}

void apply_gate(StateVector& st, const Gate& g) {
  if (g.max_qubit() >= st.num_qubits) {
    throw WidthError("gate touches qubit q" + std::to_string(g.max_qubit()) +
                     " outside a " + std::to_string(st.num_qubits) +
                     "-qubit state");
  }
  auto& a = st.amps;
  const size_t dim = a.size();
  switch (g.kind) {
    case GateKind::H: {
      const uint64_t bit = uint64_t(1) << g.target;
      for (size_t i = 0; i < dim; ++i) {
        if (!(i & bit)) {
          const Complex x = a[i];
          const Complex y = a[i | bit];
          a[i] = (x + y) * kInvSqrt2;
          a[i | bit] = (x - y) * kInvSqrt2;
        }
      }
      break;
    }
    case GateKind::T:
      apply_phase_on_mask(st, uint64_t(1) << g.target,
                          Complex(kInvSqrt2, kInvSqrt2));
      break;
    case GateKind::Tdg:
      apply_phase_on_mask(st, uint64_t(1) << g.target,
                          Complex(kInvSqrt2, -kInvSqrt2));
      break;
    case GateKind::S:
      apply_phase_on_mask(st, uint64_t(1) << g.target, Complex(0.0, 1.0));
      break;
    case GateKind::Sdg:
      apply_phase_on_mask(st, uint64_t(1) << g.target, Complex(0.0, -1.0));
      break;
    case GateKind::X:
      pauli_x(st, g.target);
      break;
    case GateKind::Z:
      pauli_z(st, g.target);
      break;
    case GateKind::CX: {
      const uint64_t cbit = uint64_t(1) << g.controls[0].qubit;
      const uint64_t tbit = uint64_t(1) << g.target;
      for (size_t i = 0; i < dim; ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(a[i], a[i | tbit]);
      }
      break;
    }
    case GateKind::CZ:
      apply_phase_on_mask(
          st,
          (uint64_t(1) << g.controls[0].qubit) | (uint64_t(1) << g.target),
          Complex(-1.0, 0.0));
      break;
    case GateKind::MCT: {
      uint64_t neg = 0;
      const uint64_t pos = control_masks(g.controls, neg);
      const uint64_t tbit = uint64_t(1) << g.target;
      for (size_t i = 0; i < dim; ++i) {
        if (!(i & tbit) && (i & pos) == pos && !(i & neg)) {
          std::swap(a[i], a[i | tbit]);
        }
      }
      break;
    }
    case GateKind::MCZ: {
      uint64_t mask = 0;
      for (uint32_t q : g.qubits) mask |= uint64_t(1) << q;
      apply_phase_on_mask(st, mask, Complex(-1.0, 0.0));
      break;
    }
  }
}

StateVector run(const Circuit& c, const StateVector& initial) {
  if (c.num_qubits != initial.num_qubits) {
    throw WidthError("circuit width " + std::to_string(c.num_qubits) +
                     " does not match state width " +
                     std::to_string(initial.num_qubits));
  }
  StateVector st = initial;
  for (const Gate& g : c.gates) apply_gate(st, g);
  if (c.global_phase_flip) {
    for (Complex& amp : st.amps) amp = -amp;
  }
  return st;
}

StateVector run(const Circuit& c, uint64_t basis_index) {
  return run(c, StateVector::basis(c.num_qubits, basis_index));
}

uint64_t measure_all(const StateVector& state, uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_index(state, rng);
}

Histogram sample_shots(const StateVector& state, uint64_t shots,
                       uint64_t seed) {
  if (shots < 1) throw Error("sample_shots needs at least one shot");
  Histogram h;
  h.num_qubits = state.num_qubits;
  h.shots = shots;
  h.seed = seed;
  SplitMix64 rng(seed);
  for (uint64_t k = 0; k < shots; ++k) h.counts[sample_index(state, rng)]++;
  return h;
}

namespace {

std::string outcome_bits(uint64_t outcome, uint32_t num_qubits) {
  std::string s(num_qubits, '0');
  for (uint32_t q = 0; q < num_qubits; ++q) {
    // qubit 0 is the rightmost character
    s[num_qubits - 1 - q] = char('0' + ((outcome >> q) & 1));
  }
  return s;
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

}  // namespace

std::string histogram_to_csv(const Histogram& h) {
  std::string out = "outcome,count,probability\n";
  for (const auto& [outcome, count] : h.counts) {
    out += outcome_bits(outcome, h.num_qubits);
    out += ',';
    out += std::to_string(count);
    out += ',';
    out += format_probability(double(count) / double(h.shots));
    out += '\n';
  }
  return out;
}

Histogram histogram_from_csv(std::string_view text) {
  Histogram h;
  size_t pos = 0;
  size_t line_no = 0;
  bool saw_header = false;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "outcome,count,probability") {
        throw ParseError("line 1: expected histogram header", line_no);
      }
      saw_header = true;
      continue;
    }
    const size_t c1 = line.find(',');
    const size_t c2 = line.find(',', c1 == std::string_view::npos ? 0 : c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected outcome,count,probability",
                       line_no);
    }
    const std::string_view bits = line.substr(0, c1);
    uint64_t outcome = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw ParseError("line " + std::to_string(line_no) +
                             ": outcome must be a bit string",
                         line_no);
      }
      outcome = (outcome << 1) | uint64_t(c - '0');
    }
    if (h.num_qubits == 0) h.num_qubits = uint32_t(bits.size());
    if (bits.size() != h.num_qubits) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": inconsistent outcome width",
                       line_no);
    }
    const uint64_t count =
        std::stoull(std::string(line.substr(c1 + 1, c2 - c1 - 1)));
    h.counts[outcome] += count;
    h.shots += count;
  }
  if (!saw_header) throw ParseError("empty histogram CSV", 0);
  return h;
}

uint64_t run_noisy(const Circuit& c, const NoiseConfig& noise, uint64_t seed) {
  if (noise.p1 < 0.0 || noise.p1 > 1.0 || noise.p2 < 0.0 || noise.p2 > 1.0) {
    throw Error("depolarizing probabilities must lie in [0, 1]");
  }
  StateVector st(c.num_qubits);
  SplitMix64 rng(seed);
  for (const Gate& g : c.gates) {
    apply_gate(st, g);
    const std::vector<uint32_t> touched = g.support();
    const double p = touched.size() == 1 ? noise.p1 : noise.p2;
    if (p <= 0.0) continue;  // consumes no randomness, preserving the stream
    for (uint32_t q : touched) {
      if (rng.next_double() < p) {
        switch (rng.next_below(3)) {
          case 0: pauli_x(st, q); break;
          case 1: pauli_y(st, q); break;
          default: pauli_z(st, q); break;
        }
      }
    }
  }
  return sample_index(st, rng);
}

Permutation extract_permutation(const Circuit& c) {
  if (c.num_qubits > uint32_t(kMaxTableVars)) {
    throw WidthError("permutation extraction sweeps all basis states; " +
                     std::to_string(c.num_qubits) + " qubits is too wide");
  }
  const uint64_t dim = uint64_t(1) << c.num_qubits;
  std::vector<uint32_t> map(dim);
  for (uint64_t b = 0; b < dim; ++b) {
    const StateVector out = run(c, b);
    uint64_t best = 0;
    double best_mag = -1.0;
    for (uint64_t i = 0; i < dim; ++i) {
      const double mag = std::abs(out.amps[i]);
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    if (best_mag < 1.0 - kBasisTol) {
      throw NotClassicalError("basis state " + std::to_string(b) +
                              " maps to a superposition");
    }
    map[b] = uint32_t(best);
  }
  try {
    return Permutation(std::move(map));
  } catch (const Error&) {
    throw NotBijectiveError("circuit repeats an output value");
  }
}

TruthTable extract_phase_function(const Circuit& c) {
  if (c.num_qubits > uint32_t(kMaxTableVars)) {
    throw WidthError("phase extraction sweeps all basis states; " +
                     std::to_string(c.num_qubits) + " qubits is too wide");
  }
  const uint64_t dim = uint64_t(1) << c.num_qubits;
  std::vector<uint8_t> bits(dim);
  for (uint64_t b = 0; b < dim; ++b) {
    const Complex amp = run(c, b).amps[b];
    if (std::abs(amp - Complex(1.0, 0.0)) <= kBasisTol) {
      bits[b] = 0;
    } else if (std::abs(amp + Complex(1.0, 0.0)) <= kBasisTol) {
      bits[b] = 1;
    } else {
      throw NotDiagonalError("basis state " + std::to_string(b) +
                             " does not map to itself with phase +-1");
    }
  }
  return TruthTable(int(c.num_qubits), std::move(bits));
}

Matrix Matrix::identity(size_t dim) {
  Matrix m(dim);
  for (size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix build_unitary(const Circuit& c) {
  if (c.num_qubits > 10) {
    throw WidthError("build_unitary supports at most 10 qubits, got " +
                     std::to_string(c.num_qubits));
  }
  const size_t dim = size_t(1) << c.num_qubits;
  Matrix m(dim);
  for (size_t b = 0; b < dim; ++b) {
    const StateVector col = run(c, b);
    for (size_t r = 0; r < dim; ++r) m.at(r, b) = col.amps[r];
  }
  return m;
}

bool unitary_equiv(const Matrix& u, const Matrix& v, double tol) {
  if (u.dim() != v.dim()) {
    throw WidthError("unitary_equiv dimension mismatch: " +
                     std::to_string(u.dim()) + " vs " +
                     std::to_string(v.dim()));
  }
  Complex trace(0.0, 0.0);
  for (size_t r = 0; r < u.dim(); ++r) {
    for (size_t col = 0; col < u.dim(); ++col) {
      trace += std::conj(u.at(r, col)) * v.at(r, col);
    }
  }
  return std::abs(trace) >= double(u.dim()) - tol;
}

}  // namespace revsynth
