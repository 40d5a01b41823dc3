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

#include "cavqft/validation.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "cavqft/bound_check.hpp"
#include "cavqft/errors.hpp"
#include "cavqft/reference_params.hpp"
#include "cavqft/scheduler.hpp"
#include "cavqft/state.hpp"

namespace cavqft {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

}  // namespace

SuiteResult swap_identity_suite() {
    Eigen::Matrix4cd product = Eigen::Matrix4cd::Identity();
    for (const auto& gate : swap_from_cr1(1)) product = two_qubit_unitary(gate) * product;
    const Eigen::Matrix4cd swap = two_qubit_unitary(GateOp::swap(1));
    const double err = (product - swap).operatorNorm();
    return {"swap-identity", err <= 1e-12, "operator-norm error " + fmt(err)};
}

SuiteResult qft_equivalence_suite(int max_photons) {
    double worst = 0.0;
    for (int n = 1; n <= max_photons; ++n) {
        const auto program = build_qft_program(n, n);
        const Eigen::MatrixXcd u = ideal_qft_unitary(n);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            const auto out = simulate_program(program, StateVector::basis(n, x));
            const Eigen::VectorXcd col = u.col(static_cast<Eigen::Index>(x));
            const auto expected = embed_qft_output(n, std::span(col.data(), static_cast<std::size_t>(col.size())));
            for (std::size_t i = 0; i < out.dimension(); ++i) worst = std::max(worst, std::abs(out[i] - expected[i]));
        }
    }
    return {"qft-equivalence", worst <= 1e-10,
            "n<=" + std::to_string(max_photons) + ", max amplitude error " + fmt(worst)};
}

SuiteResult scheduler_equivalence_suite(int max_photons) {
    int mismatches = 0;
    int violations = 0;
    for (int n = 1; n <= max_photons; ++n) {
        for (int K = 1; K <= n; ++K) {
            const auto timeline = compile_timeline(TimingConfig::with_defaults(n), K);
            if (!(timeline_to_program(timeline) == build_qft_program(n, K))) ++mismatches;
            if (!validate_timeline(timeline).ok()) ++violations;
        }
    }
    return {"scheduler-equivalence", mismatches == 0 && violations == 0,
            std::to_string(mismatches) + " program mismatches, " + std::to_string(violations) +
                " invalid timelines over n<=" + std::to_string(max_photons)};
}

SuiteResult oracle_suite(const ValidationOptions& options) {
    OracleOptions oracle;
    oracle.restarts = options.oracle_restarts;
    oracle.seed = options.seed;
    double worst_closed = 0.0;
    double worst_dk = 0.0;

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int dim = 2; dim <= 4; ++dim) {
        for (int t = 0; t < options.oracle_diagonals_per_dim; ++t) {
            std::vector<double> values(static_cast<std::size_t>(dim));
            for (auto& v : values) v = unit(rng);
            values[0] = 1.0;  // keep l_1 > 0
            const MeasurementDiag m(values);
            worst_closed = std::max(worst_closed, std::abs(postselection_distance(m) -
                                                           brute_force_postselection_distance(m, oracle)));
        }
    }
    // The loss term of every implemented CR_k on the reference device.
    const auto settings = solve_crk_settings(reference::quantum_dot(), reference::kPhaseCurveMarks,
                                             reference::kStarkLimitGHz);
    for (const auto& s : settings) {
        const MeasurementDiag m({1.0, 1.0, s.r_up_abs, s.r_down_abs});
        worst_dk = std::max(worst_dk, std::abs(options.dk_formula(s.r_up_abs, s.r_down_abs) -
                                               brute_force_postselection_distance(m, oracle)));
    }
    const bool ok = worst_closed <= 1e-4 && worst_dk <= 1e-4;
    return {"postselection-oracle", ok,
            "closed form vs oracle " + fmt(worst_closed) + ", d_k vs oracle " + fmt(worst_dk)};
}

SuiteResult bound_suite(std::uint64_t seed) {
    std::ostringstream detail;
    bool ok = true;
    NoiseBudget ideal{20.0, 0.01, reference::kCycleNs, 10, IdealGates{}};
    NoiseBudget cavity = ideal;
    cavity.gates = CavityGates{reference::quantum_dot(), reference::kStarkLimitGHz};
    for (int n : {2, 3}) {
        for (const auto* budget : {&ideal, &cavity}) {
            try {
                const auto r = validate_bound_small_n(n, *budget, seed);
                detail << "n=" << n << (budget == &ideal ? " ideal" : " cavity") << " margin " << fmt(r.margin)
                       << "; ";
            } catch (const BoundViolation& e) {
                ok = false;
                detail << e.what() << "; ";
            }
        }
    }
    return {"bound-validation", ok, detail.str()};
}

SuiteResult preset_suite() {
    using namespace reference;
    std::vector<std::string> problems;
    const auto fig4 = scenario_preset("fig4");
    for (const auto& s : fig4) {
        const auto& b = s.budget;
        if (b.K != kCoopSweepCutoff || b.T2_us != kCoopSweepT2us || b.p != kCoopSweepP || b.T_cycle_ns != kCycleNs) {
            problems.push_back("fig4/" + s.id);
        }
    }
    for (const auto& s : scenario_preset("fig5a")) {
        if (s.budget.p != kDephasingSweepP || !std::holds_alternative<IdealGates>(s.budget.gates)) {
            problems.push_back("fig5a/" + s.id);
        }
    }
    for (const auto& s : scenario_preset("fig5b")) {
        if (s.budget.T2_us != kHadamardSweepT2us || !std::holds_alternative<IdealGates>(s.budget.gates)) {
            problems.push_back("fig5b/" + s.id);
        }
    }
    const double c = cooperativity(quantum_dot());
    const double delta_0 = default_operating_point(quantum_dot()).delta_0;
    if (std::abs(delta_0 - kOffsetDetuningGHz) > 0.01) problems.push_back("offset detuning");
    if (std::abs(zeeman_splitting(quantum_dot_zeeman()) / (2.0 * delta_0) - 1.0) > 0.005) {
        problems.push_back("Zeeman field");
    }
    std::string detail = "C=" + fmt(c);
    for (const auto& p : problems) detail += ", mismatch " + p;
    return {"presets", problems.empty(), detail};
}

std::vector<SuiteResult> run_validation_suites(const ValidationOptions& options) {
    std::vector<SuiteResult> results;
    results.push_back(swap_identity_suite());
    results.push_back(qft_equivalence_suite(options.max_qft_photons));
    results.push_back(scheduler_equivalence_suite(options.max_schedule_photons));
    results.push_back(oracle_suite(options));
    results.push_back(bound_suite(options.seed));
    results.push_back(preset_suite());
    return results;
}

}  // namespace cavqft
