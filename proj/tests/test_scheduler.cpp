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

#include <algorithm>
#include <sstream>

#include "cavqft/circuit.hpp"
#include "cavqft/errors.hpp"
#include "cavqft/scheduler.hpp"
#include "doctest.h"

using namespace cavqft;

namespace {

int count_kind(const Timeline& t, EventKind kind, int photon = 0) {
    return static_cast<int>(std::count_if(t.events.begin(), t.events.end(), [&](const TimelineEvent& e) {
        return e.kind == kind && (photon == 0 || e.photon == photon);
    }));
}

}  // namespace

TEST_CASE("timing defaults and validation") {
    const auto cfg = TimingConfig::with_defaults(4);
    CHECK(cfg.T_cycle_ns == 5.0);
    CHECK(cfg.tau_1_ns == 25.0);
    CHECK(cfg.tau_2_ns == 0.25);
    CHECK_NOTHROW(cfg.validate());

    auto bad = cfg;
    bad.tau_1_ns = 20.0;
    CHECK_THROWS_AS(bad.validate(), InvalidTiming);
    bad = cfg;
    bad.tau_2_ns = 0.5;
    CHECK_THROWS_AS(bad.validate(), InvalidTiming);
    bad = cfg;
    bad.n = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidTiming);
    bad = cfg;
    bad.T_cycle_ns = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidTiming);
    CHECK_THROWS_AS(compile_timeline(cfg, 0), InvalidTiming);
}

TEST_CASE("timeline counts and routing") {
    for (int n = 1; n <= 16; ++n) {
        for (int K : {1, 2, 4, 10, 16}) {
            const auto t = compile_timeline(TimingConfig::with_defaults(n), K);
            const auto rep = validate_timeline(t);
            CHECK_MESSAGE(rep.ok(), (rep.violations.empty() ? "" : rep.violations.front()));

            int expected = 3 * n;
            for (int k = 2; k <= std::min(n, K); ++k) expected += n - k + 1;
            CHECK(rep.reflect_count == expected);
            CHECK(rep.reflects_by_k.at(1) == 3 * n);
            for (int k = 2; k <= n; ++k) {
                const int want = k <= K ? n - k + 1 : 0;
                const auto it = rep.reflects_by_k.find(k);
                CHECK((it == rep.reflects_by_k.end() ? 0 : it->second) == want);
                CHECK(std::count_if(t.events.begin(), t.events.end(), [&](const TimelineEvent& e) {
                          return e.kind == EventKind::Bypass && e.k == k;
                      }) == (k <= K ? 0 : n - k + 1));
            }
            CHECK(rep.atom_hadamards == 2 * n);
            for (int j = 1; j <= n; ++j) {
                CHECK(rep.reflects_per_photon[static_cast<std::size_t>(j)] == 3 + std::min(j, K) - 1);
                CHECK(count_kind(t, EventKind::EnterDelay1, j) == j - 1);
                CHECK(count_kind(t, EventKind::EnterDelay2, j) == 2);
                CHECK(count_kind(t, EventKind::Inject, j) == 1);
                CHECK(count_kind(t, EventKind::Emit, j) == 1);
            }
            CHECK(rep.atom_idle_cycles <= n * n);
            CHECK(rep.exposure_cycles >= rep.reflect_count / 3);
        }
    }
}

TEST_CASE("timeline replays the QFT program") {
    for (int n = 1; n <= 12; ++n) {
        for (int K : {1, 3, 12}) {
            const auto t = compile_timeline(TimingConfig::with_defaults(n), K);
            CHECK(timeline_to_program(t) == build_qft_program(n, K));
        }
    }
}

TEST_CASE("makespan grows quadratically") {
    auto span = [](int n) { return validate_timeline(compile_timeline(TimingConfig::with_defaults(n), n)).makespan_ns; };
    for (int n = 2; n <= 40; n += 2) {
        const double m = span(n);
        CHECK(m >= 5.0 * (n - 1) * n);
        CHECK(m <= 5.0 * (n + 2) * (n + 2));
    }
    CHECK(span(40) / span(20) == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("validator rejects broken timelines") {
    const auto good = compile_timeline(TimingConfig::with_defaults(3), 3);
    REQUIRE(validate_timeline(good).ok());

    SUBCASE("overlapping reflections") {
        auto t = good;
        auto e = *std::find_if(t.events.begin(), t.events.end(),
                               [](const TimelineEvent& x) { return x.kind == EventKind::Reflect; });
        e.time_ns += 0.1 * t.config.tau_2_ns;
        e.photon = 3;
        t.events.insert(t.events.begin() + 1, e);
        std::stable_sort(t.events.begin(), t.events.end(),
                         [](const auto& a, const auto& b) { return a.time_ns < b.time_ns; });
        const auto rep = validate_timeline(t);
        CHECK_FALSE(rep.ok());
        CHECK(std::any_of(rep.violations.begin(), rep.violations.end(),
                          [](const std::string& v) { return v.find("overlap") != std::string::npos; }));
    }
    SUBCASE("wrong delay") {
        auto t = good;
        auto tc = t.config;
        tc.tau_1_ns += 1.0;
        t.config = tc;
        CHECK_FALSE(validate_timeline(t).ok());
    }
    SUBCASE("missing emission") {
        auto t = good;
        std::erase_if(t.events, [](const TimelineEvent& e) { return e.kind == EventKind::Emit && e.photon == 2; });
        CHECK_FALSE(validate_timeline(t).ok());
    }
    SUBCASE("out of order") {
        auto t = good;
        std::swap(t.events.front(), t.events.back());
        CHECK_FALSE(validate_timeline(t).ok());
    }
}

TEST_CASE("timeline csv") {
    std::ostringstream os;
    write_timeline_csv(os, compile_timeline(TimingConfig::with_defaults(2), 2));
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "time_ns,event_kind,photon,parameter");
    std::getline(in, line);
    CHECK(line == "0.00000000000e+00,Inject,1,sub=1");
    const auto text = os.str();
    CHECK(text.find(",Reflect,1,k=1+HH\n") != std::string::npos);
    CHECK(text.find(",Reflect,1,k=1+H\n") != std::string::npos);
    CHECK(text.find(",Reflect,2,k=2\n") != std::string::npos);
    CHECK(text.find(",SwitchSet,0,s1=source\n") != std::string::npos);
    CHECK(to_string(EventKind::Bypass) == "Bypass");
    CHECK(to_string(SwitchPosition::Delay1) == "delay1");
}
