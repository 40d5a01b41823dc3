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

#include "cavqft/cavity.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cavqft/errors.hpp"

namespace cavqft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_rate(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        std::ostringstream msg;
        msg << "cavity rate " << name << " must be finite and positive, got " << value;
        throw InvalidArgument(msg.str());
    }
}

double wrap_two_pi(double angle) {
    double wrapped = std::fmod(angle, kTwoPi);
    if (wrapped < 0.0) wrapped += kTwoPi;
    // fmod can land on exactly 2 pi after the shift.
    if (wrapped >= kTwoPi) wrapped -= kTwoPi;
    return wrapped;
}

}  // namespace

CavityParams::CavityParams(double g, double kappa, double gamma)
    : g_(g), kappa_(kappa), gamma_(gamma) {
    require_rate(g, "g");
    require_rate(kappa, "kappa");
    require_rate(gamma, "gamma");
    if (!std::isfinite(4.0 * g * g / (gamma * kappa))) {
        throw InvalidArgument("cooperativity is not finite");
    }
}

CavityParams CavityParams::from_cooperativity(double cooperativity, double kappa, double gamma) {
    if (!std::isfinite(cooperativity) || cooperativity <= 0.0) {
        throw InvalidArgument("cooperativity must be finite and positive");
    }
    return CavityParams(std::sqrt(cooperativity * gamma * kappa / 4.0), kappa, gamma);
}

double cooperativity(const CavityParams& params) {
    return 4.0 * params.g() * params.g() / (params.gamma() * params.kappa());
}

complex_t reflection(const CavityParams& params, double delta) {
    const double c = cooperativity(params);
    const complex_t spin_coop = c / complex_t(1.0, 2.0 * delta / params.kappa());
    return (spin_coop - 1.0) / (spin_coop + 1.0);
}

ReflectionResult controlled_phase(const CavityParams& params, const OperatingPoint& op) {
    ReflectionResult out;
    out.r_up = reflection(params, op.delta_up());
    out.r_down = reflection(params, op.delta_down());
    out.theta_up = std::arg(out.r_up);
    out.theta_down = std::arg(out.r_down);
    out.delta_theta = wrap_two_pi(out.theta_down - out.theta_up);
    return out;
}

double high_C_phase(const CavityParams& params, double delta) {
    const double x = 2.0 * delta / (params.kappa() * cooperativity(params));
    return std::log(complex_t(1.0, -x) / complex_t(1.0, x)).imag();
}

double zeeman_splitting(const ZeemanConfig& cfg) {
    if (!std::isfinite(cfg.g_e) || !std::isfinite(cfg.g_h)) {
        throw InvalidArgument("Lande factors must be finite");
    }
    if (!std::isfinite(cfg.field_tesla) || cfg.field_tesla < 0.0) {
        throw InvalidArgument("magnetic field must be finite and non-negative");
    }
    return (cfg.g_e + cfg.g_h) * kBohrMagnetonGHzPerTesla * cfg.field_tesla;
}

OffsetDetuning default_operating_point(const CavityParams& params) {
    const double c = cooperativity(params);
    if (c <= 1.0) {
        std::ostringstream msg;
        msg << "operating point needs cooperativity > 1, got " << c;
        throw DegenerateCooperativity(msg.str());
    }
    const double delta_0 = 0.5 * params.kappa() * std::sqrt(c * c - 1.0);
    return {delta_0, -2.0 * delta_0};
}

double stark_shift_estimate(const CavityParams& params, int k) {
    return params.kappa() * cooperativity(params) * std::sqrt(std::ldexp(1.0, k) / kTwoPi);
}

double solve_stark_shift(const CavityParams& params, double delta_0, double delta_Z, int k,
                         double delta_S_max) {
    if (k < 1) throw InvalidArgument("CR_k needs k >= 1");
    if (!(delta_S_max > 0.0)) throw InvalidArgument("delta_S_max must be positive");

    const double target = kTwoPi / std::ldexp(1.0, k);
    auto residual = [&](double delta_S) {
        return controlled_phase(params, OperatingPoint{delta_0, delta_Z, delta_S}).delta_theta -
               target;
    };

    const double at_zero = residual(0.0);
    if (std::abs(at_zero) <= kStarkPhaseTolerance) return 0.0;

    // Geometric sweep from delta_S_max * 1e-9 up to delta_S_max.
    constexpr int kSweepPoints = 400;
    const double ratio = std::pow(1e9, 1.0 / (kSweepPoints - 1));
    double lo = 0.0;
    double f_lo = at_zero;
    double hi = -1.0;
    double f_hi = 0.0;
    double x = delta_S_max * 1e-9;
    for (int i = 0; i < kSweepPoints; ++i) {
        if (i == kSweepPoints - 1) x = delta_S_max;
        const double f = residual(x);
        if (std::abs(f) <= kStarkPhaseTolerance * 1e-2) return x;
        if ((f < 0.0) != (f_lo < 0.0)) {
            hi = x;
            f_hi = f;
            break;
        }
        lo = x;
        f_lo = f;
        x *= ratio;
    }
    if (hi < 0.0) {
        std::ostringstream msg;
        msg << "CR_" << k << " needs a Stark shift beyond " << delta_S_max
            << " GHz (asymptotic estimate " << stark_shift_estimate(params, k) << " GHz)";
        throw OutOfRange(msg.str());
    }

    double best = std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
    double best_err = std::min(std::abs(f_lo), std::abs(f_hi));
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f = residual(mid);
        if (std::abs(f) < best_err) {
            best = mid;
            best_err = std::abs(f);
        }
        // Stop two decades inside the contract tolerance.
        if (best_err <= kStarkPhaseTolerance * 1e-2 || mid == lo || mid == hi) break;
        if ((f < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f;
        } else {
            hi = mid;
        }
    }
    return best;
}

std::vector<PhaseCurveRow> phase_curve(const CavityParams& params, double delta_S_min,
                                       double delta_S_max, std::size_t points) {
    std::vector<PhaseCurveRow> rows;
    if (points == 0 || delta_S_max < delta_S_min) return rows;
    const auto offset = default_operating_point(params);
    rows.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double delta_S =
            points == 1 ? delta_S_min
                        : delta_S_min + (delta_S_max - delta_S_min) * static_cast<double>(i) /
                                            static_cast<double>(points - 1);
        const auto res =
            controlled_phase(params, OperatingPoint{offset.delta_0, offset.delta_Z, delta_S});
        rows.push_back({delta_S, res.delta_theta, std::abs(res.r_up), std::abs(res.r_down)});
    }
    return rows;
}

std::vector<CrkSetting> solve_crk_settings(const CavityParams& params, int k_max,
                                           double delta_S_max) {
    const auto offset = default_operating_point(params);
    std::vector<CrkSetting> settings;
    settings.reserve(static_cast<std::size_t>(std::max(k_max, 0)));
    for (int k = 1; k <= k_max; ++k) {
        CrkSetting s;
        s.k = k;
        s.point = {offset.delta_0, offset.delta_Z,
                   solve_stark_shift(params, offset.delta_0, offset.delta_Z, k, delta_S_max)};
        const auto res = controlled_phase(params, s.point);
        s.delta_theta = res.delta_theta;
        s.r_up_abs = std::abs(res.r_up);
        s.r_down_abs = std::abs(res.r_down);
        settings.push_back(s);
    }
    return settings;
}

}  // namespace cavqft
