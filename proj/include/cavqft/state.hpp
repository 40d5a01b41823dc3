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

// Pure-state and density-matrix simulation over (n photons + 1 atom) qubits.
//
// Basis ordering: the atom is the most significant bit, followed by photon 1,
// photon 2, ..., photon n. A basis index therefore reads a*2^n + x where x is
// the photonic bitstring x_1 x_2 ... x_n with x_1 most significant, and an
// input |x> (x) |0>_a sits at index x.
//
// Output convention of build_qft_program (untruncated): the atom carries y_1,
// photon 1 carries the ancilla's initial |0>, and photon j (j >= 2) carries
// y_{n-j+2}. qft_output_wire() encodes this map.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cavqft/circuit.hpp"

namespace cavqft {

using complex_t = std::complex<double>;

inline constexpr int kMaxPurePhotons = 19;     // 20 qubits with the atom
inline constexpr int kMaxDensityPhotons = 7;   // 8 qubits with the atom
inline constexpr int kMaxQftMatrixQubits = 12;

/// Bit position of a wire in the basis index.
int bit_of(const QubitRef& q, int photons);

class StateVector {
   public:
    /// |0...0> over `photons` photons and the atom.
    explicit StateVector(int photons);
    StateVector(int photons, std::vector<complex_t> amplitudes);

    static StateVector basis(int photons, std::uint64_t index);
    /// Photonic register in `photon_amplitudes` (length 2^photons), atom in |0>.
    static StateVector with_atom_ground(int photons, std::span<const complex_t> photon_amplitudes);
    /// Haar-random photonic register, atom in |0>.
    static StateVector random_photonic(int photons, std::mt19937_64& rng);

    int photons() const { return photons_; }
    int qubits() const { return photons_ + 1; }
    std::size_t dimension() const { return amps_.size(); }
    const std::vector<complex_t>& amplitudes() const { return amps_; }
    complex_t operator[](std::size_t i) const { return amps_[i]; }
    double norm() const;

    void apply(const GateOp& gate);
    void apply_single(int bit, const Eigen::Matrix2cd& u);
    void apply_controlled_phase(int photon, complex_t phase);
    void apply_swap(int photon);

   private:
    int photons_;
    std::vector<complex_t> amps_;
};

class DensityMatrix {
   public:
    explicit DensityMatrix(int photons);
    DensityMatrix(int photons, Eigen::MatrixXcd rho);
    static DensityMatrix from_pure(const StateVector& psi);

    int photons() const { return photons_; }
    std::size_t dimension() const { return static_cast<std::size_t>(rho_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return rho_; }
    Eigen::MatrixXcd& matrix() { return rho_; }
    double trace() const { return rho_.trace().real(); }

    void apply(const GateOp& gate);
    void apply_single(int bit, const Eigen::Matrix2cd& u);
    /// rho_ij *= d_i conj(d_j) for a diagonal operator given per basis index.
    template <typename DiagFn>
    void apply_diagonal(DiagFn&& diag) {
        const Eigen::Index dim = rho_.rows();
        std::vector<complex_t> d(static_cast<std::size_t>(dim));
        for (Eigen::Index i = 0; i < dim; ++i) d[static_cast<std::size_t>(i)] = diag(static_cast<std::uint64_t>(i));
        for (Eigen::Index c = 0; c < dim; ++c) {
            const complex_t dc = std::conj(d[static_cast<std::size_t>(c)]);
            for (Eigen::Index r = 0; r < dim; ++r) rho_(r, c) *= d[static_cast<std::size_t>(r)] * dc;
        }
    }
    void apply_swap(int photon);

    /// Hermitian, PSD within `tol`, unit trace within `tol`.
    bool is_valid(double tol = 1e-12) const;

   private:
    int photons_;
    Eigen::MatrixXcd rho_;
};

Eigen::Matrix2cd hadamard_matrix();

/// 4x4 unitary of a two-qubit gate in the |x>_p (x) |y>_a basis (photon is the
/// high bit). Single-qubit gates are embedded with identity on the other wire.
Eigen::Matrix4cd two_qubit_unitary(const GateOp& gate);

StateVector apply_gate(StateVector state, const GateOp& gate);
DensityMatrix apply_gate(DensityMatrix state, const GateOp& gate);

StateVector simulate_program(const CircuitProgram& program, StateVector input);
DensityMatrix simulate_program(const CircuitProgram& program, DensityMatrix input);

/// 2^{-n/2} e^{2 pi i x y / 2^n}.
Eigen::MatrixXcd ideal_qft_unitary(int n);

/// Wire that carries output bit y_l (l = 1..n, y_1 most significant).
QubitRef qft_output_wire(int n, int l);

/// Places a logical n-qubit QFT output into the full register per qft_output_wire,
/// with photon 1 in |0>.
StateVector embed_qft_output(int n, std::span<const complex_t> logical);

/// Reads the logical output register back out of a pure state, assuming photon 1
/// is |0>. Returns 2^n amplitudes indexed by y.
std::vector<complex_t> extract_qft_output(const StateVector& state);

/// Reduced density matrix of the logical output register (photon 1 traced out),
/// indexed by y.
Eigen::MatrixXcd extract_qft_output(const DensityMatrix& state);

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace cavqft
