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

#include "cavqft/channels.hpp"

#include <cmath>

#include "cavqft/errors.hpp"

namespace cavqft {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(std::string(what) + " must lie in [0, 1]");
}

// Multiplies every coherence between |0> and |1> of `bit` by `factor`.
void scale_coherences(DensityMatrix& rho, int bit, double factor) {
    const Eigen::Index mask = Eigen::Index{1} << bit;
    auto& m = rho.matrix();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if ((r & mask) != (c & mask)) m(r, c) *= factor;
        }
    }
}

}  // namespace

DensityMatrix dephasing_channel(DensityMatrix rho, const QubitRef& qubit, double t, double T2) {
    if (!(t >= 0.0)) throw InvalidArgument("dephasing duration must be non-negative");
    if (!(T2 > 0.0)) throw InvalidArgument("T2 must be positive");
    if (t == 0.0 || std::isinf(T2)) return rho;
    scale_coherences(rho, bit_of(qubit, rho.photons()), std::exp(-t / T2));
    return rho;
}

DensityMatrix noisy_hadamard(DensityMatrix rho, const QubitRef& qubit, double p) {
    check_probability(p, "Hadamard error probability");
    const int bit = bit_of(qubit, rho.photons());
    rho.apply_single(bit, hadamard_matrix());
    // (1-p) rho + p Z rho Z flips the sign of the coherences with weight p.
    if (p > 0.0) scale_coherences(rho, bit, 1.0 - 2.0 * p);
    return rho;
}

PostSelected lossy_reflection(DensityMatrix rho, int k, int target, double r_up_abs,
                              double r_down_abs) {
    if (!(r_up_abs >= 0.0 && r_up_abs <= 1.0 && r_down_abs >= 0.0 && r_down_abs <= 1.0)) {
        throw InvalidArgument("reflection magnitudes must lie in [0, 1]");
    }
    rho.apply(GateOp::controlled_phase(k, target));
    const std::uint64_t atom = std::uint64_t{1} << rho.photons();
    const std::uint64_t pbit = std::uint64_t{1} << bit_of(QubitRef::photon(target), rho.photons());
    rho.apply_diagonal([&](std::uint64_t i) -> complex_t {
        if (!(i & pbit)) return 1.0;  // horizontal photon misses the cavity
        return (i & atom) ? r_down_abs : r_up_abs;
    });
    const double weight = rho.trace();
    if (!(weight > 1e-300)) throw ZeroWeight("post-selection removed the entire state");
    return {std::move(rho), weight};
}

NoisyRun simulate_noisy(const CircuitProgram& program, DensityMatrix input, const NoiseModel& noise) {
    if (program.arity != input.photons()) {
        throw ArityMismatch("program arity does not match the state");
    }
    check_probability(noise.atom_hadamard_error, "atomic Hadamard error");
    check_probability(noise.photon_hadamard_error, "photonic Hadamard error");

    double success = 1.0;
    DensityMatrix rho = std::move(input);
    for (const auto& gate : program.gates) {
        switch (gate.kind) {
            case GateKind::HadamardAtom:
                rho = noisy_hadamard(std::move(rho), QubitRef::atom(), noise.atom_hadamard_error);
                break;
            case GateKind::HadamardPhoton:
                rho = noisy_hadamard(std::move(rho), QubitRef::photon(gate.photon),
                                     noise.photon_hadamard_error);
                break;
            case GateKind::HadamardPair:
                rho = noisy_hadamard(std::move(rho), QubitRef::atom(), noise.atom_hadamard_error);
                rho = noisy_hadamard(std::move(rho), QubitRef::photon(gate.photon),
                                     noise.photon_hadamard_error);
                break;
            case GateKind::ControlledPhase: {
                const auto it = noise.reflection_loss.find(gate.k);
                if (it == noise.reflection_loss.end()) {
                    rho.apply(gate);
                    break;
                }
                auto out = lossy_reflection(std::move(rho), gate.k, gate.photon, it->second.r_up_abs,
                                            it->second.r_down_abs);
                success *= out.weight;
                rho = std::move(out.state);
                rho.matrix() /= out.weight;
                break;
            }
            case GateKind::Idle:
                if (noise.cycle_ns > 0.0) {
                    rho = dephasing_channel(std::move(rho), QubitRef::atom(),
                                            gate.cycles * noise.cycle_ns, noise.T2_ns);
                }
                break;
            default:
                rho.apply(gate);
        }
    }
    return {std::move(rho), success};
}

}  // namespace cavqft
