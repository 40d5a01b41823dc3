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

// Noise channels on density matrices, chosen so that each channel's diamond
// distance to its ideal counterpart is a single closed-form budget term.

#include <limits>
#include <map>
#include <utility>

#include "cavqft/circuit.hpp"
#include "cavqft/state.hpp"

namespace cavqft {

/// Pure dephasing of `qubit` for duration `t`: coherences in its basis decay by
/// e^{-t/T2}. `t` and `T2` share a unit; T2 may be +infinity.
DensityMatrix dephasing_channel(DensityMatrix rho, const QubitRef& qubit, double t, double T2);

/// Ideal Hadamard on `qubit` followed by a phase flip with probability p.
DensityMatrix noisy_hadamard(DensityMatrix rho, const QubitRef& qubit, double p);

struct PostSelected {
    DensityMatrix state;  // unnormalised
    double weight = 0.0;  // its trace
};

/// Ideal CR_k between the atom and photon `target`, then M rho M^dagger with
/// M = diag(1, 1, |r_up|, |r_down|) on (photon, atom). Throws ZeroWeight if the
/// surviving trace underflows.
PostSelected lossy_reflection(DensityMatrix rho, int k, int target, double r_up_abs,
                              double r_down_abs);

struct ReflectionLoss {
    double r_up_abs = 1.0;
    double r_down_abs = 1.0;
};

/// Per-gate noise for simulate_noisy. Zero-valued members mean "ideal".
struct NoiseModel {
    double atom_hadamard_error = 0.0;
    double photon_hadamard_error = 0.0;
    double cycle_ns = 0.0;
    double T2_ns = std::numeric_limits<double>::infinity();
    /// Reflection magnitudes by CR order k. Missing k reflect losslessly.
    std::map<int, ReflectionLoss> reflection_loss;
};

struct NoisyRun {
    DensityMatrix state;          // renormalised
    double success_weight = 1.0;  // product of post-selection weights
};

/// Runs `program` with every gate replaced by its noisy counterpart: Hadamards
/// by noisy_hadamard, CR_k by lossy_reflection (renormalising after each one),
/// Idle by atomic dephasing over cycles * cycle_ns.
NoisyRun simulate_noisy(const CircuitProgram& program, DensityMatrix input, const NoiseModel& noise);

}  // namespace cavqft
