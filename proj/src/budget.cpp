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

#include "cavqft/budget.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cavqft/errors.hpp"

namespace cavqft {

// --- terms -------------------------------------------------------------------------

double term_dp(double T_cycle, double T2) {
    if (!(T_cycle >= 0.0)) throw InvalidArgument("T_cycle must be non-negative");
    if (!(T2 > 0.0)) throw InvalidArgument("T2 must be positive");
    if (std::isinf(T2)) return 0.0;
    return -0.5 * std::expm1(-T_cycle / T2);
}

double term_dh(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("Hadamard error must lie in [0, 1]");
    return p;
}

double term_dk_star(int k) {
    if (k < 1) throw InvalidArgument("d*_k needs k >= 1");
    return std::sin(std::numbers::pi / std::ldexp(1.0, k));
}

double term_dk(double r_up_abs, double r_down_abs) {
    const double m = std::min(r_up_abs, r_down_abs);
    if (!(m >= 0.0 && std::max(r_up_abs, r_down_abs) <= 1.0)) {
        throw InvalidArgument("reflection magnitudes must lie in [0, 1]");
    }
    return (1.0 - m) / (1.0 + m);
}

double term_dk(complex_t r_up, complex_t r_down) { return term_dk(std::abs(r_up), std::abs(r_down)); }

double term_dk_approx(const CavityParams& params, const OperatingPoint& op) {
    const double c = cooperativity(params);
    const double delta = std::min(std::abs(op.delta_up()), std::abs(op.delta_down()));
    const double x = delta / params.kappa();
    return 1.0 / (2.0 * c * c + 8.0 * x * x);
}

// --- post-selection ------------------------------------------------------------------

MeasurementDiag::MeasurementDiag(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidArgument("measurement diagonal is empty");
    for (double v : values_) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidArgument("measurement diagonal entries must be finite and non-negative");
        }
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

double postselection_distance(const MeasurementDiag& m) {
    if (m.largest() == 0.0) throw DegenerateOperator("post-selection operator is zero");
    return (m.largest() - m.smallest()) / (m.largest() + m.smallest());
}

namespace {

// cos^2 of the angle between psi and M psi, for diagonal M.
double overlap_sq(std::span<const double> diag, std::span<const complex_t> psi) {
    double norm = 0.0, a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const double p = std::norm(psi[i]);
        norm += p;
        a += diag[i] * p;
        b += diag[i] * diag[i] * p;
    }
    if (!(b > 0.0)) return 1.0;  // psi is annihilated; no post-selected output
    return a * a / (b * norm);
}

// Minimises cos^2 from one starting point; returns the best cos^2 reached.
double descend(std::span<const double> diag, std::vector<complex_t> psi, const OracleOptions& opt) {
    const std::size_t d = diag.size();
    auto normalize = [](std::vector<complex_t>& v) {
        double n = 0.0;
        for (const auto& x : v) n += std::norm(x);
        n = std::sqrt(n);
        for (auto& x : v) x /= n;
    };
    normalize(psi);
    double f = overlap_sq(diag, psi);
    double step = 1.0;
    std::vector<complex_t> grad(d), trial(d);
    for (int it = 0; it < opt.max_iterations; ++it) {
        double a = 0.0, b = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double p = std::norm(psi[i]);
            a += diag[i] * p;
            b += diag[i] * diag[i] * p;
        }
        if (!(b > 0.0)) break;
        // d f / d psi_i^* = psi_i (2 a l_i b - a^2 l_i^2) / b^2 - f psi_i  (the last
        // term is the radial part and drops out in the projection below).
        complex_t radial{};
        for (std::size_t i = 0; i < d; ++i) {
            grad[i] = psi[i] * ((2.0 * a * diag[i] * b - a * a * diag[i] * diag[i]) / (b * b));
            radial += std::conj(psi[i]) * grad[i];
        }
        double gnorm = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            grad[i] -= psi[i] * radial.real();
            gnorm += std::norm(grad[i]);
        }
        if (gnorm < 1e-30) break;

        bool improved = false;
        double gain = 0.0;
        while (step > 1e-14) {
            for (std::size_t i = 0; i < d; ++i) trial[i] = psi[i] - step * grad[i];
            normalize(trial);
            const double ft = overlap_sq(diag, trial);
            if (ft < f) {
                gain = f - ft;
                psi.swap(trial);
                f = ft;
                improved = true;
                step *= 2.0;
                break;
            }
            step *= 0.5;
        }
        if (!improved || gain < opt.tolerance * 1e-6) break;
    }
    return f;
}

double maximise_distance(std::span<const double> diag, const OracleOptions& opt, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    double best = 1.0;
    for (int r = 0; r < opt.restarts; ++r) {
        std::vector<complex_t> psi(diag.size());
        for (auto& x : psi) x = {gauss(rng), gauss(rng)};
        best = std::min(best, descend(diag, std::move(psi), opt));
    }
    return std::sqrt(std::max(0.0, 1.0 - best));
}

}  // namespace

OracleResult brute_force_postselection(const MeasurementDiag& m, const OracleOptions& options) {
    if (m.size() > 6) throw InvalidArgument("brute-force oracle is limited to dimension 6");
    if (m.largest() == 0.0) throw DegenerateOperator("post-selection operator is zero");
    std::mt19937_64 rng(options.seed);
    OracleResult result;
    const std::vector<double> bare(m.values().begin(), m.values().end());
    result.ancilla_free = maximise_distance(bare, options, rng);
    // M tensor I on an ancilla of equal dimension is diagonal with each entry repeated.
    std::vector<double> extended;
    extended.reserve(bare.size() * bare.size());
    for (double v : bare)
        for (std::size_t j = 0; j < bare.size(); ++j) extended.push_back(v);
    result.with_ancilla = maximise_distance(extended, options, rng);
    return result;
}

double brute_force_postselection_distance(const MeasurementDiag& m, const OracleOptions& options) {
    return brute_force_postselection(m, options).value();
}

// --- budget ---------------------------------------------------------------------------

void NoiseBudget::validate() const {
    std::ostringstream msg;
    if (!(T2_us > 0.0)) msg << "T2 must be positive; ";
    if (!(p >= 0.0 && p <= 1.0)) msg << "p must lie in [0, 1]; ";
    if (!(T_cycle_ns >= 0.0) || !std::isfinite(T_cycle_ns)) msg << "T_cycle must be non-negative; ";
    if (K < 1) msg << "K must be >= 1; ";
    if (const auto* cav = std::get_if<CavityGates>(&gates); cav && !(cav->delta_S_max > 0.0)) {
        msg << "delta_S_max must be positive; ";
    }
    if (!msg.str().empty()) throw InvalidArgument(msg.str());
}

BudgetModel::BudgetModel(NoiseBudget budget) : budget_(std::move(budget)) {
    budget_.validate();
    if (const auto* cav = std::get_if<CavityGates>(&budget_.gates)) {
        settings_ = solve_crk_settings(cav->params, budget_.K, cav->delta_S_max);
    }
}

int BudgetModel::effective_cutoff(int N) const {
    if (const auto* ideal = std::get_if<IdealGates>(&budget_.gates); ideal && !ideal->truncate) return N;
    return budget_.K;
}

DistanceReport BudgetModel::distance(int N) const {
    if (N < 1) throw InvalidArgument("N must be >= 1");
    DistanceReport r;
    r.N = N;
    const double n = N;
    r.d_p = term_dp(budget_.T_cycle_ns, budget_.T2_us * 1000.0);
    r.d_H = term_dh(budget_.p);

    const auto* cav = std::get_if<CavityGates>(&budget_.gates);
    const int cutoff = effective_cutoff(N);
    if (cav) {
        const auto& s1 = settings_.front();
        r.d_1 = term_dk(s1.r_up_abs, s1.r_down_abs);
        r.d_1_approx = term_dk_approx(cav->params, s1.point);
        for (int k = 2; k <= std::min(cutoff, N); ++k) {
            const auto& s = settings_[static_cast<std::size_t>(k - 1)];
            r.d_k[k] = term_dk(s.r_up_abs, s.r_down_abs);
            r.d_k_approx[k] = term_dk_approx(cav->params, s.point);
            r.sum_dk += (n - k + 1) * r.d_k[k];
        }
    }
    for (int k = cutoff + 1; k <= N; ++k) {
        const double dstar = term_dk_star(k);
        if (dstar == 0.0) break;  // underflow; every later term is zero too
        r.d_k_star[k] = dstar;
        r.sum_dk_star += (n - k + 1) * dstar;
    }

    r.weighted_dp = n * n * r.d_p;
    r.weighted_dH = 2.0 * n * r.d_H;
    r.weighted_d1 = 3.0 * n * r.d_1;
    r.D = r.weighted_dp + r.weighted_dH + r.weighted_d1 + r.sum_dk + r.sum_dk_star;
    r.Ps_raw = 1.0 - r.D;
    r.Ps = std::max(0.0, r.Ps_raw);
    return r;
}

DistanceReport total_distance(int N, const NoiseBudget& budget) { return BudgetModel(budget).distance(N); }

int max_photons(const BudgetModel& model) {
    if (model.distance(kUnboundedPhotons).Ps_raw > 0.0) return kUnboundedPhotons;
    for (int N = 1; N <= kUnboundedPhotons; ++N) {
        if (model.distance(N).Ps_raw <= 0.0) return N - 1;
    }
    return kUnboundedPhotons;
}

int max_photons(const NoiseBudget& budget) { return max_photons(BudgetModel(budget)); }

std::vector<SweepRow> sweep_success(std::span<const Scenario> scenarios) {
    std::vector<SweepRow> rows;
    for (const auto& sc : scenarios) {
        const BudgetModel model(sc.budget);
        for (int N = 1; N <= sc.N_max; ++N) rows.push_back({sc.id, model.distance(N)});
    }
    return rows;
}

}  // namespace cavqft
