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

// Checks the error budget against an explicit noisy simulation at small n.

#include <cstdint>
#include <string>
#include <vector>

#include "cavqft/budget.hpp"
#include "cavqft/channels.hpp"

namespace cavqft {

struct BoundSample {
    std::string input;  // "basis:<x>" or "random:<i>"
    double trace_distance = 0.0;
    double success_weight = 1.0;
};

struct BoundReport {
    int n = 0;
    double D = 0.0;
    double max_trace_distance = 0.0;
    double margin = 0.0;  // D - max_trace_distance
    std::vector<BoundSample> samples;
};

/// Noise model that realises `budget` on the n-photon program: atomic Hadamard
/// phase flips with probability p, one cycle of atomic dephasing per operation
/// slot (n slots per subroutine), and lossy reflections for CavityGates.
NoiseModel noise_model_for(const BudgetModel& model, int n);

/// The program that the noisy hardware runs: reflection-form swaps, idle slots,
/// and the budget's cutoff.
CircuitProgram noisy_program_for(const BudgetModel& model, int n);

/// Simulates the noisy protocol and the ideal untruncated circuit on every basis
/// input and `random_inputs` seeded Haar-random photonic inputs (atom in |0>),
/// and checks that each output trace distance is at most D. Throws BoundViolation
/// otherwise.
BoundReport validate_bound_small_n(int n, const NoiseBudget& budget, std::uint64_t seed,
                                   int random_inputs = 20);

}  // namespace cavqft
