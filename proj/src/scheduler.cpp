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

#include "cavqft/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "cavqft/errors.hpp"
#include "cavqft/table_io.hpp"

namespace cavqft {

TimingConfig TimingConfig::with_defaults(int n, double T_cycle_ns) {
    return {T_cycle_ns, (n + 1) * T_cycle_ns, T_cycle_ns / 20.0, n};
}

void TimingConfig::validate() const {
    std::ostringstream msg;
    if (n < 1) msg << "need at least one photon; ";
    if (!(T_cycle_ns > 0.0) || !std::isfinite(T_cycle_ns)) msg << "T_cycle must be positive; ";
    if (!(tau_2_ns > 0.0)) msg << "tau_2 must be positive; ";
    if (!(tau_1_ns > n * T_cycle_ns)) msg << "tau_1 must exceed n*T_cycle; ";
    if (!(tau_2_ns < T_cycle_ns / 10.0)) msg << "tau_2 must be below T_cycle/10; ";
    if (!msg.str().empty()) throw InvalidTiming(msg.str());
}

namespace {

struct Arrival {
    double time;
    long seq;
    int photon;
    int pass;  // 0 = straight from the source

    bool operator>(const Arrival& o) const { return time != o.time ? time > o.time : seq > o.seq; }
};

class TimelineBuilder {
   public:
    explicit TimelineBuilder(Timeline& t) : t_(t) {}

    void emit(TimelineEvent e) { t_.events.push_back(e); }

    void set_switch(double time, int id, SwitchPosition pos) {
        SwitchPosition& cur = id == 1 ? sw1_ : sw2_;
        bool& known = id == 1 ? sw1_known_ : sw2_known_;
        if (known && cur == pos) return;
        cur = pos;
        known = true;
        TimelineEvent e;
        e.time_ns = time;
        e.kind = EventKind::SwitchSet;
        e.switch_id = id;
        e.position = pos;
        emit(e);
    }

   private:
    Timeline& t_;
    SwitchPosition sw1_ = SwitchPosition::Source;
    SwitchPosition sw2_ = SwitchPosition::Output;
    bool sw1_known_ = false;
    bool sw2_known_ = false;
};

TimelineEvent photon_event(double time, EventKind kind, int photon, int subroutine) {
    TimelineEvent e;
    e.time_ns = time;
    e.kind = kind;
    e.photon = photon;
    e.subroutine = subroutine;
    return e;
}

}  // namespace

Timeline compile_timeline(const TimingConfig& cfg, int cutoff) {
    cfg.validate();
    if (cutoff < 1) throw InvalidTiming("cutoff K must be >= 1");

    Timeline timeline{cfg, cutoff, {}};
    TimelineBuilder out(timeline);
    std::priority_queue<Arrival, std::vector<Arrival>, std::greater<>> queue;
    long seq = 0;
    for (int j = 1; j <= cfg.n; ++j) {
        const double t = (j - 1) * cfg.T_cycle_ns;
        out.emit(photon_event(t, EventKind::Inject, j, 1));
        queue.push({t, seq++, j, 0});
    }

    while (!queue.empty()) {
        const Arrival a = queue.top();
        queue.pop();
        out.set_switch(a.time, 1, a.pass == 0 ? SwitchPosition::Source : SwitchPosition::Loop);

        // Pass p of a photon belongs to subroutine p + 1; photon i heads subroutine i.
        const int subroutine = a.pass + 1;
        if (a.photon == subroutine) {
            out.set_switch(a.time, 2, SwitchPosition::Delay2);
            for (int r = 0; r < 3; ++r) {
                const double t = a.time + r * cfg.tau_2_ns;
                auto e = photon_event(t, EventKind::Reflect, a.photon, subroutine);
                e.k = 1;
                e.hadamard = r < 2 ? PostHadamard::Pair : PostHadamard::PhotonOnly;
                out.emit(e);
                if (r < 2) out.emit(photon_event(t, EventKind::EnterDelay2, a.photon, subroutine));
            }
            const double t_exit = a.time + 2 * cfg.tau_2_ns;
            out.set_switch(t_exit, 2, SwitchPosition::Output);
            out.emit(photon_event(t_exit, EventKind::Emit, a.photon, subroutine));
            continue;
        }

        const int k = a.photon - subroutine + 1;
        auto e = photon_event(a.time, k <= cutoff ? EventKind::Reflect : EventKind::Bypass, a.photon,
                              subroutine);
        e.k = k;
        out.emit(e);
        out.set_switch(a.time, 2, SwitchPosition::Delay1);
        out.emit(photon_event(a.time, EventKind::EnterDelay1, a.photon, subroutine));
        queue.push({a.time + cfg.tau_1_ns, seq++, a.photon, a.pass + 1});
    }

    std::stable_sort(timeline.events.begin(), timeline.events.end(),
                     [](const TimelineEvent& x, const TimelineEvent& y) { return x.time_ns < y.time_ns; });
    return timeline;
}

CircuitProgram timeline_to_program(const Timeline& timeline) {
    CircuitProgram program{timeline.config.n, timeline.cutoff, {}};
    for (const auto& e : timeline.events) {
        if (e.kind != EventKind::Reflect) continue;
        program.gates.push_back(GateOp::controlled_phase(e.k, e.photon));
        if (e.hadamard == PostHadamard::Pair) program.gates.push_back(GateOp::hadamard_pair(e.photon));
        if (e.hadamard == PostHadamard::PhotonOnly) {
            program.gates.push_back(GateOp::hadamard_photon(e.photon));
        }
    }
    return program;
}

TimelineReport validate_timeline(const Timeline& timeline) {
    TimelineReport report;
    const auto& cfg = timeline.config;
    const auto& events = timeline.events;
    const int n = cfg.n;
    const double eps = 1e-9 * std::max(1.0, cfg.T_cycle_ns);
    auto violation = [&](const std::string& what) { report.violations.push_back(what); };

    for (std::size_t i = 1; i < events.size(); ++i) {
        if (events[i].time_ns < events[i - 1].time_ns) {
            violation("events out of time order at index " + std::to_string(i));
        }
    }

    std::vector<double> reflect_times;
    report.reflects_per_photon.assign(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
    std::map<int, std::vector<const TimelineEvent*>> chains;
    std::map<int, std::vector<const TimelineEvent*>> emits;
    for (const auto& e : events) {
        if (e.photon > 0) {
            if (e.photon > n) {
                violation("event for photon " + std::to_string(e.photon) + " beyond n");
                continue;
            }
            chains[e.photon].push_back(&e);
        }
        if (e.kind == EventKind::Reflect) {
            reflect_times.push_back(e.time_ns);
            ++report.reflect_count;
            ++report.reflects_by_k[e.k];
            ++report.reflects_per_photon[static_cast<std::size_t>(e.photon)];
            if (e.hadamard == PostHadamard::Pair) ++report.atom_hadamards;
        }
        if (e.kind == EventKind::Emit) emits[e.photon].push_back(&e);
    }

    std::sort(reflect_times.begin(), reflect_times.end());
    for (std::size_t i = 1; i < reflect_times.size(); ++i) {
        if (reflect_times[i] - reflect_times[i - 1] < cfg.tau_2_ns - eps) {
            std::ostringstream msg;
            msg << "cavity overlap: reflections at " << reflect_times[i - 1] << " ns and "
                << reflect_times[i] << " ns";
            violation(msg.str());
        }
    }

    for (const auto& [photon, chain] : chains) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const auto& cur = *chain[i];
            const auto& nxt = *chain[i + 1];
            if (nxt.time_ns < cur.time_ns - eps) {
                violation("photon " + std::to_string(photon) + " chain goes back in time");
            }
            double expected = -1.0;
            if (cur.kind == EventKind::EnterDelay1) expected = cur.time_ns + cfg.tau_1_ns;
            if (cur.kind == EventKind::EnterDelay2) expected = cur.time_ns + cfg.tau_2_ns;
            if (expected >= 0.0 && std::abs(nxt.time_ns - expected) > eps) {
                violation("photon " + std::to_string(photon) + " leaves a delay line at the wrong time");
            }
        }
        if (!chain.empty() && chain.back()->kind != EventKind::Emit) {
            violation("photon " + std::to_string(photon) + " never leaves the system");
        }
    }

    double last_emit = -1.0;
    for (int j = 1; j <= n; ++j) {
        const auto it = emits.find(j);
        if (it == emits.end() || it->second.size() != 1) {
            violation("photon " + std::to_string(j) + " must be emitted exactly once");
            continue;
        }
        const auto& e = *it->second.front();
        if (e.subroutine != j) {
            violation("photon " + std::to_string(j) + " emitted outside its own subroutine");
        }
        if (e.time_ns <= last_emit) violation("photon " + std::to_string(j) + " emitted out of order");
        last_emit = e.time_ns;
    }

    if (!events.empty()) report.makespan_ns = events.back().time_ns - events.front().time_ns;

    if (!reflect_times.empty()) {
        const double t0 = reflect_times.front();
        std::set<long> busy;
        for (double t : reflect_times) {
            busy.insert(static_cast<long>(std::floor((t - t0) / cfg.T_cycle_ns + 1e-9)));
        }
        report.exposure_cycles = static_cast<int>(*busy.rbegin()) + 1;
        report.atom_idle_cycles = report.exposure_cycles - static_cast<int>(busy.size());
    }
    return report;
}

std::string to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Inject: return "Inject";
        case EventKind::Reflect: return "Reflect";
        case EventKind::Bypass: return "Bypass";
        case EventKind::EnterDelay1: return "EnterDelay1";
        case EventKind::EnterDelay2: return "EnterDelay2";
        case EventKind::SwitchSet: return "SwitchSet";
        case EventKind::Emit: return "Emit";
    }
    return "?";
}

std::string to_string(SwitchPosition pos) {
    switch (pos) {
        case SwitchPosition::Source: return "source";
        case SwitchPosition::Loop: return "loop";
        case SwitchPosition::Delay2: return "delay2";
        case SwitchPosition::Output: return "output";
        case SwitchPosition::Delay1: return "delay1";
    }
    return "?";
}

void write_timeline_csv(std::ostream& os, const Timeline& timeline) {
    os << "time_ns,event_kind,photon,parameter\n";
    for (const auto& e : timeline.events) {
        std::string param;
        switch (e.kind) {
            case EventKind::Reflect:
                param = "k=" + std::to_string(e.k);
                if (e.hadamard == PostHadamard::Pair) param += "+HH";
                if (e.hadamard == PostHadamard::PhotonOnly) param += "+H";
                break;
            case EventKind::Bypass:
                param = "k=" + std::to_string(e.k);
                break;
            case EventKind::SwitchSet:
                param = "s" + std::to_string(e.switch_id) + "=" + to_string(e.position);
                break;
            default:
                param = "sub=" + std::to_string(e.subroutine);
        }
        os << format_sci(e.time_ns) << ',' << to_string(e.kind) << ',' << e.photon << ',' << param << '\n';
    }
}

}  // namespace cavqft
