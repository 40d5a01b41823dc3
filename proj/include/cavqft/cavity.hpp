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

// Spin-dependent reflection off a single-sided atom-cavity system.
//
// All rates and detunings are ordinary frequencies in GHz. The reflection
// coefficient is the exact finite-cooperativity steady-state expression
//
//     r(D) = (C_s - 1) / (C_s + 1),   C_s = C / (1 + 2 i D / kappa),
//
// where C = 4 g^2 / (gamma kappa). Phases use the principal branch (-pi, pi].

#include <complex>
#include <cstdint>
#include <vector>

namespace cavqft {

using complex_t = std::complex<double>;

/// Bohr magneton over Planck's constant, GHz per tesla.
inline constexpr double kBohrMagnetonGHzPerTesla = 13.996244936;

/// Atom-cavity rates in GHz. Construction validates positivity.
class CavityParams {
   public:
    CavityParams(double g, double kappa, double gamma);

    /// Keeps kappa and gamma and picks g so that 4 g^2 / (gamma kappa) == cooperativity.
    static CavityParams from_cooperativity(double cooperativity, double kappa, double gamma);

    double g() const { return g_; }
    double kappa() const { return kappa_; }
    double gamma() const { return gamma_; }

   private:
    double g_;
    double kappa_;
    double gamma_;
};

/// Detuning configuration for one reflection. Spin-up sees delta_S + delta_0,
/// spin-down sees delta_S + delta_Z + delta_0.
struct OperatingPoint {
    double delta_0 = 0.0;
    double delta_Z = 0.0;
    double delta_S = 0.0;

    double delta_up() const { return delta_S + delta_0; }
    double delta_down() const { return delta_S + delta_Z + delta_0; }
};

struct ZeemanConfig {
    double g_e = 0.0;
    double g_h = 0.0;
    double field_tesla = 0.0;
};

struct ReflectionResult {
    complex_t r_up;
    complex_t r_down;
    double theta_up = 0.0;
    double theta_down = 0.0;
    /// theta_down - theta_up reduced into [0, 2 pi).
    double delta_theta = 0.0;
};

double cooperativity(const CavityParams& params);

/// Exact reflection coefficient at detuning `delta` (GHz).
complex_t reflection(const CavityParams& params, double delta);

ReflectionResult controlled_phase(const CavityParams& params, const OperatingPoint& op);

/// High-cooperativity phase Im ln[(1 - 2iD/(kappa C)) / (1 + 2iD/(kappa C))].
/// Diagnostic only: it discards the reflection loss.
double high_C_phase(const CavityParams& params, double delta);

/// Magnitude of the Zeeman splitting (g_e + g_h) (mu_B / h) B, in GHz.
double zeeman_splitting(const ZeemanConfig& cfg);

struct OffsetDetuning {
    double delta_0;
    double delta_Z;
};

/// delta_0 = (kappa/2) sqrt(C^2 - 1), delta_Z = -2 delta_0. At delta_S = 0 this
/// gives a controlled phase of exactly pi. Throws DegenerateCooperativity if C <= 1.
OffsetDetuning default_operating_point(const CavityParams& params);

/// Stark shift in [0, delta_S_max] whose controlled phase equals 2 pi / 2^k.
///
/// The bracket is located by a geometric sweep and refined by bisection to
/// within kStarkPhaseTolerance. Throws OutOfRange if the sweep finds no sign
/// change, i.e. CR_k is not reachable with the available tuning.
double solve_stark_shift(const CavityParams& params, double delta_0, double delta_Z, int k,
                         double delta_S_max);

inline constexpr double kStarkPhaseTolerance = 1e-9;

/// Large-k asymptote kappa C sqrt(2^k / 2 pi) of the Stark shift needed for CR_k.
double stark_shift_estimate(const CavityParams& params, int k);

/// One row of the controlled-phase versus Stark shift curve.
struct PhaseCurveRow {
    double delta_S = 0.0;
    double delta_theta = 0.0;
    double r_up_abs = 0.0;
    double r_down_abs = 0.0;
};

/// Samples `points` evenly spaced Stark shifts in [delta_S_min, delta_S_max]
/// around the default operating point. Empty when points == 0 or the range is
/// reversed.
std::vector<PhaseCurveRow> phase_curve(const CavityParams& params, double delta_S_min,
                                       double delta_S_max, std::size_t points);

/// Solved CR_k operating point together with its reflection magnitudes.
struct CrkSetting {
    int k = 0;
    OperatingPoint point;
    double delta_theta = 0.0;
    double r_up_abs = 1.0;
    double r_down_abs = 1.0;
};

/// Solves the default-offset operating point for CR_1..CR_kmax.
std::vector<CrkSetting> solve_crk_settings(const CavityParams& params, int k_max,
                                           double delta_S_max);

}  // namespace cavqft
