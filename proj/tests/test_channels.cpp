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
#include <limits>
#include <random>

#include "cavqft/budget.hpp"
#include "cavqft/channels.hpp"
#include "cavqft/errors.hpp"
#include "doctest.h"
#include "oracles/dense_sim.hpp"
#include "oracles/diamond.hpp"

using namespace cavqft;

namespace {

const QubitRef kAtom = QubitRef::atom();

Eigen::MatrixXcd random_rho(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    const int dim = 1 << (n + 1);
    Eigen::MatrixXcd a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
    Eigen::MatrixXcd rho = a * a.adjoint();
    return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("dephasing channel") {
    std::mt19937_64 rng(1);
    const DensityMatrix rho(2, random_rho(2, rng));
    const auto out = dephasing_channel(rho, kAtom, 5.0, 20000.0);
    const double f = std::exp(-5.0 / 20000.0);
    const int abit = bit_of(kAtom, 2);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const bool differ = ((i >> abit) & 1) != ((j >> abit) & 1);
            CHECK(std::abs(out.matrix()(i, j) - rho.matrix()(i, j) * (differ ? f : 1.0)) < 1e-15);
        }
    CHECK(out.is_valid());

    const auto same = dephasing_channel(rho, kAtom, 5.0, std::numeric_limits<double>::infinity());
    CHECK((same.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(dephasing_channel(rho, kAtom, -1.0, 10.0), InvalidArgument);
    CHECK_THROWS_AS(dephasing_channel(rho, kAtom, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("dephasing distance equals d_p") {
    for (double t_over_T2 : {1e-3, 0.05, 0.4, 2.0}) {
        const double T2 = 1000.0;
        const double t = t_over_T2 * T2;
        const double d = oracle::diamond_distance(
            [&](DensityMatrix r) { return dephasing_channel(std::move(r), kAtom, t, T2); },
            [](DensityMatrix r) { return r; });
        CHECK(d == doctest::Approx(term_dp(t, T2)).epsilon(1e-5));
    }
}

TEST_CASE("noisy Hadamard") {
    std::mt19937_64 rng(2);
    const DensityMatrix rho(1, random_rho(1, rng));
    const auto ideal = apply_gate(rho, GateOp::hadamard_atom());
    CHECK((noisy_hadamard(rho, kAtom, 0.0).matrix() - ideal.matrix()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(noisy_hadamard(rho, kAtom, 0.3).is_valid());
    CHECK_THROWS_AS(noisy_hadamard(rho, kAtom, 1.5), InvalidArgument);
    CHECK_THROWS_AS(noisy_hadamard(rho, kAtom, -0.1), InvalidArgument);

    for (double p : {1e-3, 0.01, 0.1, 0.5}) {
        const double d = oracle::diamond_distance(
            [&](DensityMatrix r) { return noisy_hadamard(std::move(r), kAtom, p); },
            [](DensityMatrix r) { return apply_gate(std::move(r), GateOp::hadamard_atom()); });
        CHECK(d == doctest::Approx(term_dh(p)).epsilon(1e-5));
    }
}

TEST_CASE("lossy reflection") {
    std::mt19937_64 rng(4);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const DensityMatrix rho(n, random_rho(n, rng));
            for (int k : {1, 2, 5}) {
                for (int target = 1; target <= n; ++target) {
                    const auto ideal = apply_gate(rho, GateOp::controlled_phase(k, target));
                    const auto lossless = lossy_reflection(rho, k, target, 1.0, 1.0);
                    CHECK(lossless.weight == doctest::Approx(1.0));
                    CHECK((lossless.state.matrix() - ideal.matrix()).cwiseAbs().maxCoeff() < 1e-14);

                    const double up = 0.9 + 0.1 * std::uniform_real_distribution<double>()(rng);
                    const double down = 0.9 + 0.1 * std::uniform_real_distribution<double>()(rng);
                    const auto lossy = lossy_reflection(rho, k, target, up, down);
                    CHECK(lossy.weight <= 1.0 + 1e-14);
                    CHECK(lossy.weight >= std::min(up, down) * std::min(up, down) - 1e-14);
                    CHECK(lossy.weight == doctest::Approx(lossy.state.trace()));
                    auto normalised = lossy.state;
                    normalised.matrix() /= lossy.weight;
                    CHECK(normalised.is_valid(1e-10));
                    CHECK(trace_distance(normalised, ideal) <= term_dk(up, down) + 1e-12);
                }
            }
        }
    }
    Eigen::MatrixXcd one = Eigen::MatrixXcd::Zero(4, 4);
    one(3, 3) = 1;
    CHECK_THROWS_AS(lossy_reflection(DensityMatrix(1, one), 1, 1, 0.0, 0.0), ZeroWeight);
}

TEST_CASE("noisy simulation reduces to the ideal one without noise") {
    std::mt19937_64 rng(6);
    for (int n = 1; n <= 4; ++n) {
        const auto p = build_qft_program(n, n, {SwapForm::Reflections, true});
        const DensityMatrix rho(n, random_rho(n, rng));
        const auto ideal = simulate_program(p, rho);
        NoiseModel quiet;
        quiet.cycle_ns = 5;
        const auto run = simulate_noisy(p, rho, quiet);
        CHECK(run.success_weight == doctest::Approx(1.0));
        CHECK((run.state.matrix() - ideal.matrix()).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("noisy simulation stays physical and degrades monotonically") {
    std::mt19937_64 rng(8);
    const int n = 3;
    const auto p = build_qft_program(n, n, {SwapForm::Reflections, true});
    const DensityMatrix rho(n, random_rho(n, rng));
    const auto ideal = simulate_program(p, rho);
    double prev = 0;
    for (double err : {0.0, 0.01, 0.05, 0.2}) {
        NoiseModel m;
        m.atom_hadamard_error = err;
        m.photon_hadamard_error = err;
        m.cycle_ns = 5;
        m.T2_ns = 2000;
        m.reflection_loss[1] = {0.99, 0.98};
        const auto run = simulate_noisy(p, rho, m);
        CHECK(run.state.is_valid(1e-10));
        CHECK(run.success_weight < 1.0);
        const double td = trace_distance(run.state, ideal);
        CHECK(td >= prev - 1e-12);
        prev = td;
    }
    CHECK_THROWS_AS(simulate_noisy(p, DensityMatrix(2), NoiseModel{}), ArityMismatch);
}
