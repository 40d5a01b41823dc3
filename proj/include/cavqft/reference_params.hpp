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

// Single source of truth for the quantum-dot device parameters and the
// published figure scenarios. Presets are built from these constants only.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cavqft/budget.hpp"
#include "cavqft/cavity.hpp"

namespace cavqft::reference {

inline constexpr double kCouplingGHz = 11.0;     // g
inline constexpr double kAtomDecayGHz = 0.3;     // kappa
inline constexpr double kCavityDecayGHz = 28.0;  // gamma
inline constexpr double kLandeElectron = 0.43;
inline constexpr double kLandeHole = 0.21;
inline constexpr double kFieldTesla = 1.93;
inline constexpr double kOffsetDetuningGHz = 8.64;  // quoted to 3 significant figures
inline constexpr double kStarkLimitGHz = 1000.0;
inline constexpr int kMaxReachableK = 14;
inline constexpr int kPhaseCurveMarks = 10;  // CR_1..CR_10 marked on the phase curve

inline constexpr double kCycleNs = 5.0;
inline constexpr int kSweepMaxPhotons = 50;

// Cooperativity sweep: K = 10, T2 = 20 us, p = 1e-3.
inline constexpr int kCoopSweepCutoff = 10;
inline constexpr double kCoopSweepT2us = 20.0;
inline constexpr double kCoopSweepP = 1e-3;
inline constexpr double kCoopSweepValues[] = {100.0, 200.0, 400.0, 1000.0};
/// The cooperativity sweep explores devices beyond today's Stark range.
inline constexpr double kCoopSweepStarkLimitGHz = 1e5;

// Dephasing sweep: ideal CR_k gates, p = 1e-2.
inline constexpr double kDephasingSweepP = 1e-2;
inline constexpr double kDephasingSweepT2us[] = {5.0, 20.0, 100.0,
                                                 std::numeric_limits<double>::infinity()};

// Hadamard-error sweep: ideal CR_k gates, T2 = 20 us.
inline constexpr double kHadamardSweepT2us = 20.0;
inline constexpr double kHadamardSweepP[] = {0.05, 0.01, 0.005, 0.001};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

CavityParams quantum_dot();
ZeemanConfig quantum_dot_zeeman();

/// Names accepted by scenario_preset().
std::vector<std::string> preset_names();

/// "fig4" (cooperativity sweep), "fig5a" (dephasing sweep), "fig5b" (Hadamard
/// error sweep). Throws ParseError for unknown names.
std::vector<Scenario> scenario_preset(std::string_view name);

}  // namespace cavqft::reference
