// Copyright 2026 The cavqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Gate-level description of the streaming QFT: n photonic qubits share a single
// atomic ancilla. Every two-qubit gate acts between the atom and one photon.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cavqft {

enum class QubitKind { Atom, Photon };

/// A wire of the circuit. Photons are numbered 1..n in arrival order.
struct QubitRef {
    QubitKind kind = QubitKind::Atom;
    int index = 0;

    static QubitRef atom() { return {QubitKind::Atom, 0}; }
    static QubitRef photon(int j) { return {QubitKind::Photon, j}; }

    bool is_atom() const { return kind == QubitKind::Atom; }
    friend bool operator==(const QubitRef&, const QubitRef&) = default;
};

enum class GateKind {
    HadamardAtom,
    HadamardPhoton,
    /// H on the atom and on photon j in the same step (H_a tensor H_p).
    HadamardPair,
    /// diag(1, 1, 1, e^{2 pi i / 2^k}) between the atom and photon j.
    ControlledPhase,
    /// Atom <-> photon j exchange as a single gate.
    Swap,
    /// diag(1, e^{-i angle}) on photon j. Classical phase bookkeeping of the reflection.
    PhaseFix,
    /// The atom waits `cycles` operation cycles. Identity unless noise is simulated.
    Idle,
};

struct GateOp {
    GateKind kind = GateKind::HadamardAtom;
    int photon = 0;  // photon index for photon-touching gates, 0 otherwise
    int k = 0;       // ControlledPhase order
    int cycles = 0;  // Idle length
    double angle = 0.0;

    static GateOp hadamard_atom() { return {GateKind::HadamardAtom}; }
    static GateOp hadamard_photon(int j) { return {GateKind::HadamardPhoton, j}; }
    static GateOp hadamard_pair(int j) { return {GateKind::HadamardPair, j}; }
    static GateOp controlled_phase(int k, int j) { return {GateKind::ControlledPhase, j, k}; }
    static GateOp swap(int j) { return {GateKind::Swap, j}; }
    static GateOp phase_fix(double angle, int j) {
        return {GateKind::PhaseFix, j, 0, 0, angle};
    }
    static GateOp idle(int cycles) { return {GateKind::Idle, 0, 0, cycles}; }

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

struct CircuitProgram {
    int arity = 0;   // number of photons n
    int cutoff = 0;  // largest implemented k
    std::vector<GateOp> gates;

    friend bool operator==(const CircuitProgram&, const CircuitProgram&) = default;
};

enum class SwapForm {
    /// Swaps realised by three CR_1 reflections (the hardware form).
    Reflections,
    /// Swaps kept as single Swap gates followed by an explicit atomic Hadamard.
    Compact,
};

struct ProgramOptions {
    SwapForm swap_form = SwapForm::Reflections;
    /// Insert Idle gates so that every subroutine spans exactly n operation cycles.
    bool idle_slots = false;
};

/// CR_1, H_{a,p}, CR_1, H_{a,p}, CR_1, H_{a,p}: the atom <-> photon j swap.
std::vector<GateOp> swap_from_cr1(int photon);

/// The n-subroutine streaming QFT with CR_k gates dropped for k > cutoff.
///
/// In the Reflections form subroutine i is
///
///     CR_1(p_i) HH(p_i) CR_1(p_i) HH(p_i) CR_1(p_i) H(p_i)  CR_2(p_{i+1}) ... CR_{n-i+1}(p_n)
///
/// i.e. swap_from_cr1 with the transform's own atomic Hadamard folded into the
/// final H_{a,p}, which leaves only the photonic half. Each subroutine therefore
/// carries two atomic Hadamards.
CircuitProgram build_qft_program(int n, int cutoff, ProgramOptions options = {});

/// Checks photon indices against the arity and CR orders against the cutoff.
void validate_program(const CircuitProgram& program);

/// One gate per line: `H a`, `H p3`, `HH p3`, `CR 4 p7`, `SWAP p2`,
/// `PHASEFIX 1.5707963 p3`, `IDLE 2`. A header line `QFT n=<n> K=<K>` carries
/// arity and cutoff.
std::string to_text(const CircuitProgram& program);
std::string to_text(const GateOp& gate);

/// Inverse of to_text. Blank lines and lines starting with '#' are skipped.
CircuitProgram parse_program(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GateOp& gate);

}  // namespace cavqft
