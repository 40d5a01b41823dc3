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

#include <cmath>
#include <numbers>

#include "cavqft/cavity.hpp"
#include "cavqft/errors.hpp"
#include "cavqft/reference_params.hpp"
#include "doctest.h"

using namespace cavqft;
using std::numbers::pi;

namespace {

const CavityParams kDot = reference::quantum_dot();

// Frozen from an independent numpy/scipy evaluation of the same closed forms
// (brentq on the wrapped phase difference, xtol 1e-14).
constexpr double kDotCooperativity = 57.61904761904762;
constexpr double kDotOffset = 8.641555391932446;
constexpr double kStark2 = 12.220084462365216;
constexpr double kStark10 = 220.6549037531302;
constexpr double kStark14 = 882.6217589633684;

double wrapped_gap(double a, double b) {
    double d = std::fmod(a - b, 2 * pi);
    if (d > pi) d -= 2 * pi;
    if (d < -pi) d += 2 * pi;
    return std::abs(d);
}

}  // namespace

TEST_CASE("cooperativity") {
    CHECK(cooperativity(kDot) == doctest::Approx(kDotCooperativity).epsilon(1e-14));
    CHECK(cooperativity(CavityParams(2, 2, 2)) == doctest::Approx(4.0));
    CHECK(cooperativity(CavityParams::from_cooperativity(400, 0.3, 28)) == doctest::Approx(400.0));
}

TEST_CASE("cavity params reject non-positive rates") {
    CHECK_THROWS_AS(CavityParams(0.0, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(CavityParams(1, -1, 1), InvalidArgument);
    CHECK_THROWS_AS(CavityParams(1, 1, std::nan("")), InvalidArgument);
}

TEST_CASE("default operating point") {
    const auto op = default_operating_point(kDot);
    CHECK(op.delta_0 == doctest::Approx(kDotOffset).epsilon(1e-13));
    CHECK(std::abs(op.delta_0 - 8.64) < 0.01);
    CHECK(op.delta_Z == doctest::Approx(-2 * kDotOffset));

    // C = sqrt(2), kappa = 2 gives delta_0 = 1.
    const auto unit = default_operating_point(CavityParams::from_cooperativity(std::sqrt(2.0), 2.0, 1.0));
    CHECK(unit.delta_0 == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(default_operating_point(CavityParams(1, 2, 2)), DegenerateCooperativity);
    CHECK_THROWS_AS(default_operating_point(CavityParams::from_cooperativity(0.5, 1, 1)), DegenerateCooperativity);
}

TEST_CASE("operating point detunings") {
    const OperatingPoint op{3.0, -6.0, 1.5};
    CHECK(op.delta_up() == 4.5);
    CHECK(op.delta_down() == -1.5);
    const OperatingPoint def{kDotOffset, -2 * kDotOffset, 0.0};
    CHECK(def.delta_up() == doctest::Approx(-def.delta_down()));
}

TEST_CASE("reflection limits") {
    const double c = cooperativity(kDot);
    const auto r0 = reflection(kDot, 0.0);
    CHECK(r0.real() == doctest::Approx((c - 1) / (c + 1)));
    CHECK(r0.imag() == 0.0);

    const auto far = reflection(kDot, 1e9);
    CHECK(std::abs(far + 1.0) < 1e-6);
    CHECK(std::abs(reflection(kDot, -1e9) + 1.0) < 1e-6);

    // At +delta_0 the spin cooperativity is a pure phase and r = -i tan(phi / 2).
    const double phi = std::atan(std::sqrt(c * c - 1));
    const auto r = reflection(kDot, kDotOffset);
    CHECK(std::abs(r - complex_t(0, -std::tan(phi / 2))) < 1e-12);
    CHECK(std::arg(r) == doctest::Approx(-pi / 2));
}

TEST_CASE("reflection is passive and phase-antisymmetric") {
    for (double c : {1.5, 10.0, 57.6, 400.0}) {
        const auto p = CavityParams::from_cooperativity(c, 0.3, 28);
        for (double delta = -2000; delta <= 2000; delta += 3.7) {
            const auto r = reflection(p, delta);
            CHECK(std::abs(r) <= 1.0 + 1e-15);
            // r(-D) = conj(r(D)): the phases mirror about zero (about -pi on the
            // (-2 pi, 0] branch).
            CHECK(std::abs(reflection(p, -delta) - std::conj(r)) < 1e-14);
        }
    }
}

TEST_CASE("loss at the default detunings stays below 2/C") {
    for (double c = 10; c <= 1000; c *= 1.3) {
        const auto p = CavityParams::from_cooperativity(c, 0.3, 28);
        const auto op = default_operating_point(p);
        for (double d : {op.delta_0, op.delta_0 + op.delta_Z}) {
            CHECK(1 - std::norm(reflection(p, d)) <= 2 / c);
        }
    }
}

TEST_CASE("controlled phase") {
    const auto off = default_operating_point(kDot);
    const auto at_zero = controlled_phase(kDot, {off.delta_0, off.delta_Z, 0.0});
    CHECK(std::abs(at_zero.delta_theta - pi) < 1e-9);
    CHECK(at_zero.theta_up == doctest::Approx(std::arg(at_zero.r_up)));
    CHECK(at_zero.theta_down == doctest::Approx(std::arg(at_zero.r_down)));

    const auto far = controlled_phase(kDot, {off.delta_0, off.delta_Z, 1e7});
    CHECK(far.delta_theta < 1e-8);

    SUBCASE("monotone decreasing over the physical branch") {
        double prev = controlled_phase(kDot, {off.delta_0, off.delta_Z, 0.0}).delta_theta;
        for (double s = 0.01; s <= 1000.0; s += 0.01) {
            const double cur = controlled_phase(kDot, {off.delta_0, off.delta_Z, s}).delta_theta;
            REQUIRE(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("high-C phase") {
    CHECK(high_C_phase(kDot, 0.0) == 0.0);
    const double c = cooperativity(kDot);
    CHECK(high_C_phase(kDot, kDot.kappa() * c / 2) == doctest::Approx(-pi / 2));

    // The exact phase and the high-C form agree without any constant offset.
    const auto p400 = CavityParams::from_cooperativity(400, 0.3, 28);
    const double scale = 10 * p400.kappa() * 400;
    double worst = 0;
    for (int i = -1000; i <= 1000; ++i) {
        const double d = scale * i / 1000.0;
        worst = std::max(worst, wrapped_gap(std::arg(reflection(p400, d)), high_C_phase(p400, d)));
    }
    CHECK(worst < 0.01);
}

TEST_CASE("zeeman splitting") {
    CHECK(zeeman_splitting({0.43, 0.21, 0.0}) == 0.0);
    CHECK(zeeman_splitting({0.5, 0.5, 1.0}) == doctest::Approx(13.996).epsilon(1e-4));
    const double dz = zeeman_splitting(reference::quantum_dot_zeeman());
    CHECK(dz == doctest::Approx(17.2878).epsilon(1e-4));
    CHECK(std::abs(dz / (2 * kDotOffset) - 1) < 0.005);
    CHECK_THROWS_AS(zeeman_splitting({0.4, 0.2, -1.0}), InvalidArgument);
}

TEST_CASE("stark shift solver") {
    const auto off = default_operating_point(kDot);
    CHECK(solve_stark_shift(kDot, off.delta_0, off.delta_Z, 1, 1000) == 0.0);
    CHECK(solve_stark_shift(kDot, off.delta_0, off.delta_Z, 2, 1000) == doctest::Approx(kStark2).epsilon(1e-7));
    CHECK(solve_stark_shift(kDot, off.delta_0, off.delta_Z, 10, 1000) == doctest::Approx(kStark10).epsilon(1e-7));
    CHECK(solve_stark_shift(kDot, off.delta_0, off.delta_Z, 14, 1000) == doctest::Approx(kStark14).epsilon(1e-7));
    CHECK_THROWS_AS(solve_stark_shift(kDot, off.delta_0, off.delta_Z, 15, 1000), OutOfRange);
    CHECK_THROWS_AS(solve_stark_shift(kDot, off.delta_0, off.delta_Z, 0, 1000), InvalidArgument);
    CHECK_THROWS_AS(solve_stark_shift(kDot, off.delta_0, off.delta_Z, 3, 0.0), InvalidArgument);
    CHECK(stark_shift_estimate(kDot, 15) == doctest::Approx(1248.31).epsilon(1e-4));
}

TEST_CASE("stark solution round-trips and follows the asymptote") {
    for (double c : {20.0, 57.62, 400.0}) {
        const auto p = CavityParams::from_cooperativity(c, 0.3, 28);
        const auto off = default_operating_point(p);
        for (int k = 1; k <= 14; ++k) {
            const double limit = 1.1 * stark_shift_estimate(p, k) + 10;
            const double s = solve_stark_shift(p, off.delta_0, off.delta_Z, k, limit);
            const double dt = controlled_phase(p, {off.delta_0, off.delta_Z, s}).delta_theta;
            CHECK(std::abs(dt - 2 * pi / std::ldexp(1.0, k)) <= kStarkPhaseTolerance);
            if (k >= 6 && c == 57.62) CHECK(std::abs(s / stark_shift_estimate(p, k) - 1) < 0.1);
        }
    }
}

TEST_CASE("phase curve") {
    const auto rows = phase_curve(kDot, 0.0, 250.0, 501);
    REQUIRE(rows.size() == 501);
    CHECK(rows.front().delta_S == 0.0);
    CHECK(std::abs(rows.front().delta_theta - pi) < 1e-9);
    CHECK(rows.back().delta_S == 250.0);
    for (const auto& r : rows) {
        CHECK(r.r_up_abs <= 1.0);
        CHECK(r.r_down_abs <= 1.0);
    }
    CHECK(phase_curve(kDot, 0.0, 250.0, 0).empty());
    CHECK(phase_curve(kDot, 10.0, 0.0, 5).empty());
    CHECK(phase_curve(kDot, 3.0, 3.0, 1).size() == 1);
}

TEST_CASE("CR_k settings for the reference device") {
    const auto settings = solve_crk_settings(kDot, reference::kMaxReachableK, reference::kStarkLimitGHz);
    REQUIRE(settings.size() == 14);
    for (const auto& s : settings) {
        CHECK(std::abs(s.delta_theta - 2 * pi / std::ldexp(1.0, s.k)) <= kStarkPhaseTolerance);
        CHECK(s.r_up_abs < 1.0);
        CHECK(s.r_down_abs < 1.0);
    }
    CHECK_THROWS_AS(solve_crk_settings(kDot, 15, reference::kStarkLimitGHz), OutOfRange);
}
