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

// Self-check suites run by `cavqft validate`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cavqft/budget.hpp"

namespace cavqft {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions {
    std::uint64_t seed = 20240607;
    int max_qft_photons = 8;
    int max_schedule_photons = 16;
    int oracle_diagonals_per_dim = 10;
    int oracle_restarts = 200;
    /// Formula under test in the oracle suite. Replaceable to check that the
    /// suite catches a wrong loss term.
    std::function<double(double, double)> dk_formula = [](double up, double down) {
        return term_dk(up, down);
    };
};

std::vector<SuiteResult> run_validation_suites(const ValidationOptions& options = {});

SuiteResult swap_identity_suite();
SuiteResult qft_equivalence_suite(int max_photons);
SuiteResult scheduler_equivalence_suite(int max_photons);
SuiteResult oracle_suite(const ValidationOptions& options);
SuiteResult bound_suite(std::uint64_t seed);
SuiteResult preset_suite();

}  // namespace cavqft
