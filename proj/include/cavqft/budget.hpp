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

// Diamond-distance error budget of the streaming QFT.
//
// Chaining the per-step distances gives
//
//     D = N^2 d_p + 2N d_H + 3N d_1 + sum_{k=2}^{K} (N-k+1) d_k
//                                  + sum_{k=K+1}^{N} (N-k+1) d*_k
//
// and the protocol succeeds with probability at least P_s = 1 - D.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cavqft/cavity.hpp"

namespace cavqft {

// --- individual terms ----------------------------------------------------------

/// Dephasing over one operation cycle: (1 - e^{-T_cycle/T2}) / 2. Same time unit
/// for both arguments; T2 may be +infinity.
double term_dp(double T_cycle, double T2);

/// Atomic Hadamard error; the distance equals the phase-flip probability.
double term_dh(double p);

/// Distance between CR_k and the identity, |1 - e^{2 pi i / 2^k}| / 2 = sin(pi / 2^k).
double term_dk_star(int k);

/// Lossy reflection versus ideal CR_k: (1 - m) / (1 + m), m = min(|r_up|, |r_down|).
double term_dk(complex_t r_up, complex_t r_down);
double term_dk(double r_up_abs, double r_down_abs);

/// The closed-form approximation 1 / (2 C^2 + 8 delta^2 / kappa^2) with
/// delta = min(|delta_up|, |delta_down|). Reported beside the exact term, never
/// used in D.
double term_dk_approx(const CavityParams& params, const OperatingPoint& op);

// --- post-selection distance ------------------------------------------------------

/// Non-negative diagonal of a post-selection operator, kept sorted descending.
class MeasurementDiag {
   public:
    explicit MeasurementDiag(std::vector<double> values);

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double largest() const { return values_.front(); }
    double smallest() const { return values_.back(); }

   private:
    std::vector<double> values_;
};

/// Distance between rho -> M rho M^dag / Tr[.] and the identity channel:
/// (l_1 - l_n) / (l_1 + l_n). Throws DegenerateOperator if l_1 == 0.
double postselection_distance(const MeasurementDiag& m);

struct OracleOptions {
    int restarts = 200;
    int max_iterations = 4000;
    double tolerance = 1e-8;
    std::uint64_t seed = 20240607;
};

struct OracleResult {
    double ancilla_free = 0.0;
    double with_ancilla = 0.0;
    double value() const { return std::max(ancilla_free, with_ancilla); }
};

/// Maximises sqrt(1 - |<psi|phi>|^2), phi = M psi / |M psi|, over pure states by
/// random-restart projected gradient ascent on the unit sphere, both on the
/// bare space and with an ancilla of equal dimension (M tensor I). Limited to
/// dimension 6.
OracleResult brute_force_postselection(const MeasurementDiag& m, const OracleOptions& options = {});
double brute_force_postselection_distance(const MeasurementDiag& m, const OracleOptions& options = {});

// --- budget ---------------------------------------------------------------------------

/// Perfect reflections. With truncate == false the cutoff is ignored (K = N) and
/// no d*_k terms appear.
struct IdealGates {
    bool truncate = false;
};

/// Reflections off a real cavity at the solved default-offset operating points.
struct CavityGates {
    CavityParams params;
    double delta_S_max = 1000.0;  // GHz
};

using GateQuality = std::variant<IdealGates, CavityGates>;

struct NoiseBudget {
    double T2_us = 20.0;  // may be +infinity
    double p = 0.0;
    double T_cycle_ns = 5.0;
    int K = 10;
    GateQuality gates = IdealGates{};

    /// Throws InvalidArgument unless T2 > 0, 0 <= p <= 1, T_cycle >= 0, K >= 1.
    void validate() const;
};

struct DistanceReport {
    int N = 0;
    double d_p = 0.0;
    double d_H = 0.0;
    double d_1 = 0.0;
    double d_1_approx = 0.0;
    std::map<int, double> d_k;         // k = 2..min(K, N)
    std::map<int, double> d_k_approx;  // same keys as d_k
    std::map<int, double> d_k_star;    // k = K+1..N while the term is non-zero
    double weighted_dp = 0.0;          // N^2 d_p
    double weighted_dH = 0.0;          // 2N d_H
    double weighted_d1 = 0.0;          // 3N d_1
    double sum_dk = 0.0;               // sum (N-k+1) d_k
    double sum_dk_star = 0.0;          // sum (N-k+1) d*_k
    double D = 0.0;
    double Ps_raw = 1.0;  // 1 - D, possibly negative
    double Ps = 1.0;      // max(0, 1 - D)
};

/// Evaluates the budget for many N with the cavity operating points solved once.
class BudgetModel {
   public:
    /// Propagates OutOfRange when CavityGates cannot reach some k <= K.
    explicit BudgetModel(NoiseBudget budget);

    DistanceReport distance(int N) const;

    const NoiseBudget& budget() const { return budget_; }
    /// CR_1..CR_K settings; empty for IdealGates.
    const std::vector<CrkSetting>& settings() const { return settings_; }
    /// Cutoff actually applied at size N.
    int effective_cutoff(int N) const;

   private:
    NoiseBudget budget_;
    std::vector<CrkSetting> settings_;
};

DistanceReport total_distance(int N, const NoiseBudget& budget);

inline constexpr int kUnboundedPhotons = 100000;

/// Largest N with 1 - D > 0, by increasing scan. Returns kUnboundedPhotons when
/// the bound is still positive there.
int max_photons(const NoiseBudget& budget);
int max_photons(const BudgetModel& model);

struct Scenario {
    std::string id;
    NoiseBudget budget;
    int N_max = 50;
    std::uint64_t seed = 0;
};

struct SweepRow {
    std::string scenario_id;
    DistanceReport report;
};

/// P_s(N) for N = 1..N_max of every scenario, in scenario order.
std::vector<SweepRow> sweep_success(std::span<const Scenario> scenarios);

}  // namespace cavqft
