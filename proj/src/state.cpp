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

#include "cavqft/state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cavqft/errors.hpp"

namespace cavqft {

namespace {

void check_photons(int photons, int cap, const char* what) {
    if (photons < 0 || photons > cap) {
        throw InvalidArgument(std::string(what) + " supports 0.." + std::to_string(cap) +
                              " photons, got " + std::to_string(photons));
    }
}

complex_t cr_phase(int k) {
    return std::polar(1.0, 2.0 * std::numbers::pi / std::ldexp(1.0, k));
}

void check_photon_index(int photon, int photons) {
    if (photon < 1 || photon > photons) {
        throw ArityMismatch("photon " + std::to_string(photon) + " outside 1.." +
                            std::to_string(photons));
    }
}

void check_arity(const CircuitProgram& program, int photons) {
    if (program.arity != photons) {
        throw ArityMismatch("program has arity " + std::to_string(program.arity) +
                            " but state has " + std::to_string(photons) + " photons");
    }
}

}  // namespace

int bit_of(const QubitRef& q, int photons) {
    if (q.is_atom()) return photons;
    check_photon_index(q.index, photons);
    return photons - q.index;
}

Eigen::Matrix2cd hadamard_matrix() {
    const double s = 1.0 / std::numbers::sqrt2;
    Eigen::Matrix2cd h;
    h << s, s, s, -s;
    return h;
}

// --- StateVector -------------------------------------------------------------

StateVector::StateVector(int photons) : photons_(photons) {
    check_photons(photons, kMaxPurePhotons, "pure-state simulation");
    amps_.assign(std::size_t{1} << (photons + 1), complex_t{});
    amps_[0] = 1.0;
}

StateVector::StateVector(int photons, std::vector<complex_t> amplitudes)
    : photons_(photons), amps_(std::move(amplitudes)) {
    check_photons(photons, kMaxPurePhotons, "pure-state simulation");
    if (amps_.size() != (std::size_t{1} << (photons + 1))) {
        throw ArityMismatch("amplitude vector length does not match " + std::to_string(photons) +
                            " photons plus atom");
    }
}

StateVector StateVector::basis(int photons, std::uint64_t index) {
    StateVector s(photons);
    if (index >= s.dimension()) throw InvalidArgument("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::with_atom_ground(int photons, std::span<const complex_t> photon_amplitudes) {
    StateVector s(photons);
    if (photon_amplitudes.size() != (std::size_t{1} << photons)) {
        throw ArityMismatch("photonic register needs 2^n amplitudes");
    }
    std::copy(photon_amplitudes.begin(), photon_amplitudes.end(), s.amps_.begin());
    return s;
}

StateVector StateVector::random_photonic(int photons, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<complex_t> reg(std::size_t{1} << photons);
    double norm2 = 0.0;
    for (auto& a : reg) {
        a = {gauss(rng), gauss(rng)};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : reg) a *= inv;
    return with_atom_ground(photons, reg);
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
}

void StateVector::apply_single(int bit, const Eigen::Matrix2cd& u) {
    const std::size_t stride = std::size_t{1} << bit;
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const complex_t a0 = amps_[i0];
            const complex_t a1 = amps_[i1];
            amps_[i0] = u(0, 0) * a0 + u(0, 1) * a1;
            amps_[i1] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
}

void StateVector::apply_controlled_phase(int photon, complex_t phase) {
    const std::size_t mask = (std::size_t{1} << photons_) | (std::size_t{1} << bit_of(QubitRef::photon(photon), photons_));
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) amps_[i] *= phase;
    }
}

void StateVector::apply_swap(int photon) {
    const std::size_t atom = std::size_t{1} << photons_;
    const std::size_t pbit = std::size_t{1} << bit_of(QubitRef::photon(photon), photons_);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        // Visit each |a=1, p=0> once and exchange it with |a=0, p=1>.
        if ((i & atom) && !(i & pbit)) std::swap(amps_[i], amps_[(i ^ atom) | pbit]);
    }
}

void StateVector::apply(const GateOp& gate) {
    const auto h = hadamard_matrix();
    switch (gate.kind) {
        case GateKind::HadamardAtom:
            apply_single(photons_, h);
            break;
        case GateKind::HadamardPhoton:
            apply_single(bit_of(QubitRef::photon(gate.photon), photons_), h);
            break;
        case GateKind::HadamardPair:
            apply_single(photons_, h);
            apply_single(bit_of(QubitRef::photon(gate.photon), photons_), h);
            break;
        case GateKind::ControlledPhase:
            if (gate.k < 1) throw InvalidArgument("CR_k needs k >= 1");
            apply_controlled_phase(gate.photon, cr_phase(gate.k));
            break;
        case GateKind::Swap:
            check_photon_index(gate.photon, photons_);
            apply_swap(gate.photon);
            break;
        case GateKind::PhaseFix: {
            Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
            u(1, 1) = std::polar(1.0, -gate.angle);
            apply_single(bit_of(QubitRef::photon(gate.photon), photons_), u);
            break;
        }
        case GateKind::Idle:
            break;
    }
}

// --- DensityMatrix -----------------------------------------------------------

DensityMatrix::DensityMatrix(int photons) : photons_(photons) {
    check_photons(photons, kMaxDensityPhotons, "density-matrix simulation");
    const Eigen::Index dim = Eigen::Index{1} << (photons + 1);
    rho_ = Eigen::MatrixXcd::Zero(dim, dim);
    rho_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(int photons, Eigen::MatrixXcd rho) : photons_(photons), rho_(std::move(rho)) {
    check_photons(photons, kMaxDensityPhotons, "density-matrix simulation");
    const Eigen::Index dim = Eigen::Index{1} << (photons + 1);
    if (rho_.rows() != dim || rho_.cols() != dim) {
        throw ArityMismatch("density matrix shape does not match " + std::to_string(photons) +
                            " photons plus atom");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
    Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(),
                                         static_cast<Eigen::Index>(psi.dimension()));
    return DensityMatrix(psi.photons(), v * v.adjoint());
}

void DensityMatrix::apply_single(int bit, const Eigen::Matrix2cd& u) {
    const Eigen::Index stride = Eigen::Index{1} << bit;
    const Eigen::Index dim = rho_.rows();
    // rho <- U rho
    for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
        for (Eigen::Index off = 0; off < stride; ++off) {
            const Eigen::Index i0 = base + off;
            const Eigen::Index i1 = i0 + stride;
            for (Eigen::Index c = 0; c < dim; ++c) {
                const complex_t a0 = rho_(i0, c);
                const complex_t a1 = rho_(i1, c);
                rho_(i0, c) = u(0, 0) * a0 + u(0, 1) * a1;
                rho_(i1, c) = u(1, 0) * a0 + u(1, 1) * a1;
            }
        }
    }
    // rho <- rho U^dagger
    for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
        for (Eigen::Index off = 0; off < stride; ++off) {
            const Eigen::Index i0 = base + off;
            const Eigen::Index i1 = i0 + stride;
            for (Eigen::Index r = 0; r < dim; ++r) {
                const complex_t a0 = rho_(r, i0);
                const complex_t a1 = rho_(r, i1);
                rho_(r, i0) = a0 * std::conj(u(0, 0)) + a1 * std::conj(u(0, 1));
                rho_(r, i1) = a0 * std::conj(u(1, 0)) + a1 * std::conj(u(1, 1));
            }
        }
    }
}

void DensityMatrix::apply_swap(int photon) {
    const std::uint64_t atom = std::uint64_t{1} << photons_;
    const std::uint64_t pbit = std::uint64_t{1} << bit_of(QubitRef::photon(photon), photons_);
    const Eigen::Index dim = rho_.rows();
    Eigen::VectorXi perm(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto u = static_cast<std::uint64_t>(i);
        const bool a = u & atom;
        const bool p = u & pbit;
        std::uint64_t j = u & ~(atom | pbit);
        if (a) j |= pbit;
        if (p) j |= atom;
        perm(i) = static_cast<int>(j);
    }
    Eigen::PermutationMatrix<Eigen::Dynamic> p(perm);
    rho_ = p * rho_ * p.transpose();
}

void DensityMatrix::apply(const GateOp& gate) {
    const auto h = hadamard_matrix();
    switch (gate.kind) {
        case GateKind::HadamardAtom:
            apply_single(photons_, h);
            break;
        case GateKind::HadamardPhoton:
            apply_single(bit_of(QubitRef::photon(gate.photon), photons_), h);
            break;
        case GateKind::HadamardPair:
            apply_single(photons_, h);
            apply_single(bit_of(QubitRef::photon(gate.photon), photons_), h);
            break;
        case GateKind::ControlledPhase: {
            if (gate.k < 1) throw InvalidArgument("CR_k needs k >= 1");
            const std::uint64_t mask = (std::uint64_t{1} << photons_) |
                                       (std::uint64_t{1} << bit_of(QubitRef::photon(gate.photon), photons_));
            const complex_t phase = cr_phase(gate.k);
            apply_diagonal([&](std::uint64_t i) { return (i & mask) == mask ? phase : complex_t{1.0}; });
            break;
        }
        case GateKind::Swap:
            check_photon_index(gate.photon, photons_);
            apply_swap(gate.photon);
            break;
        case GateKind::PhaseFix: {
            const std::uint64_t pbit = std::uint64_t{1} << bit_of(QubitRef::photon(gate.photon), photons_);
            const complex_t phase = std::polar(1.0, -gate.angle);
            apply_diagonal([&](std::uint64_t i) { return (i & pbit) ? phase : complex_t{1.0}; });
            break;
        }
        case GateKind::Idle:
            break;
    }
}

bool DensityMatrix::is_valid(double tol) const {
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(rho_.trace() - complex_t{1.0}) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

// --- free functions ----------------------------------------------------------

Eigen::Matrix4cd two_qubit_unitary(const GateOp& gate) {
    const Eigen::Matrix2cd h = hadamard_matrix();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    auto kron = [](const Eigen::Matrix2cd& photon, const Eigen::Matrix2cd& atom) {
        Eigen::Matrix4cd out;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int d = 0; d < 2; ++d) out(2 * a + c, 2 * b + d) = photon(a, b) * atom(c, d);
        return out;
    };
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    switch (gate.kind) {
        case GateKind::HadamardAtom:
            return kron(id, h);
        case GateKind::HadamardPhoton:
            return kron(h, id);
        case GateKind::HadamardPair:
            return kron(h, h);
        case GateKind::ControlledPhase:
            u(3, 3) = cr_phase(gate.k);
            return u;
        case GateKind::Swap:
            u.setZero();
            u(0, 0) = u(3, 3) = 1.0;
            u(1, 2) = u(2, 1) = 1.0;
            return u;
        case GateKind::PhaseFix: {
            Eigen::Matrix2cd f = id;
            f(1, 1) = std::polar(1.0, -gate.angle);
            return kron(f, id);
        }
        case GateKind::Idle:
            return u;
    }
    return u;
}

StateVector apply_gate(StateVector state, const GateOp& gate) {
    state.apply(gate);
    return state;
}

DensityMatrix apply_gate(DensityMatrix state, const GateOp& gate) {
    state.apply(gate);
    return state;
}

StateVector simulate_program(const CircuitProgram& program, StateVector input) {
    check_arity(program, input.photons());
    for (const auto& gate : program.gates) input.apply(gate);
    return input;
}

DensityMatrix simulate_program(const CircuitProgram& program, DensityMatrix input) {
    check_arity(program, input.photons());
    for (const auto& gate : program.gates) input.apply(gate);
    return input;
}

Eigen::MatrixXcd ideal_qft_unitary(int n) {
    if (n < 0 || n > kMaxQftMatrixQubits) {
        throw InvalidArgument("ideal QFT matrix supports 0.." + std::to_string(kMaxQftMatrixQubits) +
                              " qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    Eigen::MatrixXcd u(dim, dim);
    for (std::uint64_t y = 0; y < dim; ++y) {
        for (std::uint64_t x = 0; x < dim; ++x) {
            // Reduce x*y mod 2^n before converting to an angle.
            const std::uint64_t phase_index = (x * y) & (dim - 1);
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase_index) /
                                 static_cast<double>(dim);
            u(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = std::polar(scale, angle);
        }
    }
    return u;
}

QubitRef qft_output_wire(int n, int l) {
    if (l < 1 || l > n) throw InvalidArgument("output bit index outside 1..n");
    if (l == 1) return QubitRef::atom();
    return QubitRef::photon(n - l + 2);
}

namespace {

// Physical basis index holding logical output y, photon 1 in |ancilla_bit>.
std::uint64_t physical_index(int n, std::uint64_t y, int ancilla_bit) {
    std::uint64_t idx = 0;
    for (int l = 1; l <= n; ++l) {
        const std::uint64_t bit = (y >> (n - l)) & 1U;
        idx |= bit << bit_of(qft_output_wire(n, l), n);
    }
    if (n >= 1 && ancilla_bit) idx |= std::uint64_t{1} << bit_of(QubitRef::photon(1), n);
    return idx;
}

}  // namespace

StateVector embed_qft_output(int n, std::span<const complex_t> logical) {
    if (logical.size() != (std::size_t{1} << n)) throw ArityMismatch("logical register needs 2^n amplitudes");
    StateVector out(n);
    std::vector<complex_t> amps(out.dimension());
    for (std::uint64_t y = 0; y < logical.size(); ++y) amps[physical_index(n, y, 0)] = logical[y];
    return StateVector(n, std::move(amps));
}

std::vector<complex_t> extract_qft_output(const StateVector& state) {
    const int n = state.photons();
    std::vector<complex_t> logical(std::size_t{1} << n);
    for (std::uint64_t y = 0; y < logical.size(); ++y) logical[y] = state[physical_index(n, y, 0)];
    return logical;
}

Eigen::MatrixXcd extract_qft_output(const DensityMatrix& state) {
    const int n = state.photons();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (int anc = 0; anc < 2; ++anc) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            for (Eigen::Index c = 0; c < dim; ++c) {
                out(r, c) += state.matrix()(
                    static_cast<Eigen::Index>(physical_index(n, static_cast<std::uint64_t>(r), anc)),
                    static_cast<Eigen::Index>(physical_index(n, static_cast<std::uint64_t>(c), anc)));
            }
        }
    }
    return out;
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ArityMismatch("trace distance shape mismatch");
    const Eigen::MatrixXcd diff = a - b;
    // Symmetrize to absorb rounding in the inputs.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (diff + diff.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return trace_distance(a.matrix(), b.matrix());
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.dimension() != b.dimension()) throw ArityMismatch("fidelity dimension mismatch");
    complex_t overlap{};
    for (std::size_t i = 0; i < a.dimension(); ++i) overlap += std::conj(a[i]) * b[i];
    return std::norm(overlap);
}

}  // namespace cavqft
