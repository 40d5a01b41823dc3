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

#include "cavqft/bound_check.hpp"

#include <random>
#include <sstream>

#include "cavqft/errors.hpp"
#include "cavqft/state.hpp"

namespace cavqft {

NoiseModel noise_model_for(const BudgetModel& model, int n) {
    const auto& b = model.budget();
    NoiseModel noise;
    noise.atom_hadamard_error = b.p;
    noise.cycle_ns = b.T_cycle_ns;
    noise.T2_ns = b.T2_us * 1000.0;
    for (const auto& s : model.settings()) {
        if (s.k > n) break;
        noise.reflection_loss[s.k] = {s.r_up_abs, s.r_down_abs};
    }
    return noise;
}

CircuitProgram noisy_program_for(const BudgetModel& model, int n) {
    return build_qft_program(n, model.effective_cutoff(n), {SwapForm::Reflections, true});
}

BoundReport validate_bound_small_n(int n, const NoiseBudget& budget, std::uint64_t seed,
                                   int random_inputs) {
    if (n < 1 || n > kMaxDensityPhotons) {
        throw InvalidArgument("bound validation needs 1 <= n <= " + std::to_string(kMaxDensityPhotons));
    }
    const BudgetModel model(budget);
    const DistanceReport distance = model.distance(n);
    const NoiseModel noise = noise_model_for(model, n);
    const CircuitProgram noisy = noisy_program_for(model, n);
    const CircuitProgram ideal = build_qft_program(n, n);

    BoundReport report;
    report.n = n;
    report.D = distance.D;

    auto run = [&](const std::string& label, const StateVector& input) {
        const auto target = DensityMatrix::from_pure(simulate_program(ideal, input));
        const auto out = simulate_noisy(noisy, DensityMatrix::from_pure(input), noise);
        const double td = trace_distance(out.state, target);
        report.samples.push_back({label, td, out.success_weight});
        report.max_trace_distance = std::max(report.max_trace_distance, td);
    };

    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        run("basis:" + std::to_string(x), StateVector::basis(n, x));
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_inputs; ++i) {
        run("random:" + std::to_string(i), StateVector::random_photonic(n, rng));
    }

    report.margin = report.D - report.max_trace_distance;
    // Rounding slack for the zero-noise case, where both sides are ~0.
    if (report.max_trace_distance > report.D + 1e-12) {
        std::ostringstream msg;
        msg << "n=" << n << ": trace distance " << report.max_trace_distance << " exceeds D=" << report.D;
        throw BoundViolation(msg.str());
    }
    return report;
}

}  // namespace cavqft
