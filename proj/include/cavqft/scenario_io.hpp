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

// Scenario configs (JSON) and sweep tables (CSV / JSON).
//
// A scenario object has the keys
//
//   id             optional string, defaults to "s<index>"
//   T2_us          number, or null / "inf" for no dephasing
//   p              atomic Hadamard error probability
//   T_cycle_ns     operation cycle
//   K              cutoff
//   cooperativity  number, or "ideal"
//   N_max          largest photon number in the sweep
//   seed           optional unsigned integer
//
// plus the optional extras delta_S_max_GHz, kappa_GHz, gamma_GHz (cavity
// scenarios) and truncate (ideal scenarios). The document is either one
// scenario, an array of them, or {"scenarios": [...]}.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cavqft/budget.hpp"

namespace cavqft {

std::vector<Scenario> parse_scenarios(std::string_view json_text);

/// Columns: scenario_id,N,d_p,d_H,d1,sum_dk,sum_dk_star,D,P_s_raw,P_s.
/// sum_dk and sum_dk_star carry their (N-k+1) weights; d_p, d_H and d1 are the
/// unweighted per-step terms.
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);

/// Same fields as the CSV, one object per row, under "rows".
std::string sweep_to_json(std::span<const SweepRow> rows);

}  // namespace cavqft
