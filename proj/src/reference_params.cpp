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

#include "cavqft/reference_params.hpp"

#include <cmath>
#include <cstdio>

#include "cavqft/errors.hpp"

namespace cavqft::reference {

CavityParams quantum_dot() { return CavityParams(kCouplingGHz, kAtomDecayGHz, kCavityDecayGHz); }

ZeemanConfig quantum_dot_zeeman() { return {kLandeElectron, kLandeHole, kFieldTesla}; }

std::vector<std::string> preset_names() { return {"fig4", "fig5a", "fig5b"}; }

namespace {

std::string label(const char* prefix, double value) {
    if (std::isinf(value)) return std::string(prefix) + "inf";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%g", prefix, value);
    return buf;
}

Scenario ideal_scenario(std::string id, double T2_us, double p) {
    Scenario s;
    s.id = std::move(id);
    s.budget = {T2_us, p, kCycleNs, kCoopSweepCutoff, IdealGates{}};
    s.N_max = kSweepMaxPhotons;
    s.seed = kDefaultSeed;
    return s;
}

}  // namespace

std::vector<Scenario> scenario_preset(std::string_view name) {
    std::vector<Scenario> out;
    if (name == "fig4") {
        auto device = ideal_scenario(label("C=", cooperativity(quantum_dot())), kCoopSweepT2us, kCoopSweepP);
        device.budget.gates = CavityGates{quantum_dot(), kCoopSweepStarkLimitGHz};
        out.push_back(device);
        for (double c : kCoopSweepValues) {
            auto s = ideal_scenario(label("C=", c), kCoopSweepT2us, kCoopSweepP);
            s.budget.gates = CavityGates{CavityParams::from_cooperativity(c, kAtomDecayGHz, kCavityDecayGHz),
                                         kCoopSweepStarkLimitGHz};
            out.push_back(s);
        }
        out.push_back(ideal_scenario("ideal", kCoopSweepT2us, kCoopSweepP));
        auto ideal_cut = ideal_scenario("ideal_K10", kCoopSweepT2us, kCoopSweepP);
        ideal_cut.budget.gates = IdealGates{true};
        out.push_back(ideal_cut);
    } else if (name == "fig5a") {
        for (double t2 : kDephasingSweepT2us) out.push_back(ideal_scenario(label("T2=", t2), t2, kDephasingSweepP));
    } else if (name == "fig5b") {
        for (double p : kHadamardSweepP) out.push_back(ideal_scenario(label("p=", p), kHadamardSweepT2us, p));
    } else {
        throw ParseError("unknown preset '" + std::string(name) + "'");
    }
    return out;
}

}  // namespace cavqft::reference
