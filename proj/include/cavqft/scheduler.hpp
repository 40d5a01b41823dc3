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

// Discrete-event model of the streaming hardware: photons enter one operation
// cycle apart, the head photon of each round bounces three times through the
// short loop (delay 2) to swap with the atom and then leaves, and every other
// photon reflects once and is sent round the long loop (delay 1) to the next
// round.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cavqft/circuit.hpp"

namespace cavqft {

struct TimingConfig {
    double T_cycle_ns = 5.0;
    double tau_1_ns = 0.0;
    double tau_2_ns = 0.0;
    int n = 1;

    /// tau_1 = (n + 1) T_cycle, tau_2 = T_cycle / 20.
    static TimingConfig with_defaults(int n, double T_cycle_ns = 5.0);

    /// Throws InvalidTiming unless tau_1 > n T_cycle and tau_2 < T_cycle / 10.
    void validate() const;
};

enum class EventKind { Inject, Reflect, Bypass, EnterDelay1, EnterDelay2, SwitchSet, Emit };

/// Hadamard applied right after a Reflect (swap reflections only).
enum class PostHadamard { None, Pair, PhotonOnly };

enum class SwitchPosition { Source, Loop, Delay2, Output, Delay1 };

struct TimelineEvent {
    double time_ns = 0.0;
    EventKind kind = EventKind::Inject;
    int photon = 0;  // 0 for switch events
    int k = 0;       // Stark setting of a Reflect / the dropped order of a Bypass
    PostHadamard hadamard = PostHadamard::None;
    int switch_id = 0;
    SwitchPosition position = SwitchPosition::Source;
    int subroutine = 0;
};

struct Timeline {
    TimingConfig config;
    int cutoff = 0;
    std::vector<TimelineEvent> events;
};

/// Event schedule for all n subroutines. CR_k with k > cutoff become Bypass
/// events: the photon passes the cavity slot while the atom is detuned.
Timeline compile_timeline(const TimingConfig& cfg, int cutoff);

/// Reflect events in time order, each followed by its Hadamard annotation.
CircuitProgram timeline_to_program(const Timeline& timeline);

struct TimelineReport {
    std::vector<std::string> violations;
    double makespan_ns = 0.0;
    int reflect_count = 0;
    std::map<int, int> reflects_by_k;
    std::vector<int> reflects_per_photon;  // index j = photon j, entry 0 unused
    int atom_hadamards = 0;
    /// Operation-cycle slots from the first to the last reflection.
    int exposure_cycles = 0;
    /// Exposure slots in which the cavity reflects nothing.
    int atom_idle_cycles = 0;

    bool ok() const { return violations.empty(); }
};

/// Checks cavity exclusivity (reflections hold the cavity for tau_2), delay
/// consistency, one emission per photon in photon order, and collects counts.
TimelineReport validate_timeline(const Timeline& timeline);

std::string to_string(EventKind kind);
std::string to_string(SwitchPosition pos);

/// CSV with header time_ns,event_kind,photon,parameter.
void write_timeline_csv(std::ostream& os, const Timeline& timeline);

}  // namespace cavqft
