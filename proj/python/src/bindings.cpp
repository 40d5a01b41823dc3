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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <sstream>

#include "cavqft/bound_check.hpp"
#include "cavqft/budget.hpp"
#include "cavqft/cavity.hpp"
#include "cavqft/circuit.hpp"
#include "cavqft/errors.hpp"
#include "cavqft/reference_params.hpp"
#include "cavqft/scenario_io.hpp"
#include "cavqft/scheduler.hpp"
#include "cavqft/state.hpp"
#include "cavqft/validation.hpp"

namespace py = pybind11;
using namespace cavqft;

namespace {

NoiseBudget make_budget(double T2_us, double p, double T_cycle_ns, int K, std::optional<double> coop,
                        bool truncate, double delta_S_max) {
    NoiseBudget b;
    b.T2_us = T2_us;
    b.p = p;
    b.T_cycle_ns = T_cycle_ns;
    b.K = K;
    if (coop) {
        b.gates = CavityGates{CavityParams::from_cooperativity(*coop, reference::kAtomDecayGHz,
                                                               reference::kCavityDecayGHz),
                              delta_S_max};
    } else {
        b.gates = IdealGates{truncate};
    }
    b.validate();
    return b;
}

py::dict report_dict(const DistanceReport& r) {
    py::dict d;
    d["N"] = r.N;
    d["d_p"] = r.d_p;
    d["d_H"] = r.d_H;
    d["d1"] = r.d_1;
    d["d1_approx"] = r.d_1_approx;
    d["d_k"] = r.d_k;
    d["d_k_approx"] = r.d_k_approx;
    d["d_k_star"] = r.d_k_star;
    d["sum_dk"] = r.sum_dk;
    d["sum_dk_star"] = r.sum_dk_star;
    d["D"] = r.D;
    d["P_s_raw"] = r.Ps_raw;
    d["P_s"] = r.Ps;
    return d;
}

std::vector<complex_t> simulate_qft(int n, int K, const std::vector<complex_t>& photonic) {
    const auto psi = StateVector::with_atom_ground(n, photonic);
    return extract_qft_output(simulate_program(build_qft_program(n, K), psi));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cavity-QED photonic QFT toolkit";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<DegenerateCooperativity>(m, "DegenerateCooperativity", base.ptr());
    py::register_exception<OutOfRange>(m, "OutOfRange", base.ptr());
    py::register_exception<ArityMismatch>(m, "ArityMismatch", base.ptr());
    py::register_exception<ZeroWeight>(m, "ZeroWeight", base.ptr());
    py::register_exception<DegenerateOperator>(m, "DegenerateOperator", base.ptr());
    py::register_exception<InvalidTiming>(m, "InvalidTiming", base.ptr());
    py::register_exception<BoundViolation>(m, "BoundViolation", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    // cavity model
    py::class_<CavityParams>(m, "CavityParams")
        .def(py::init<double, double, double>(), py::arg("g"), py::arg("kappa"), py::arg("gamma"))
        .def_static("from_cooperativity", &CavityParams::from_cooperativity, py::arg("cooperativity"),
                    py::arg("kappa"), py::arg("gamma"))
        .def_property_readonly("g", &CavityParams::g)
        .def_property_readonly("kappa", &CavityParams::kappa)
        .def_property_readonly("gamma", &CavityParams::gamma)
        .def("__repr__", [](const CavityParams& p) {
            std::ostringstream os;
            os << "CavityParams(g=" << p.g() << ", kappa=" << p.kappa() << ", gamma=" << p.gamma() << ")";
            return os.str();
        });

    py::class_<OperatingPoint>(m, "OperatingPoint")
        .def(py::init<double, double, double>(), py::arg("delta_0"), py::arg("delta_Z"), py::arg("delta_S") = 0.0)
        .def_readwrite("delta_0", &OperatingPoint::delta_0)
        .def_readwrite("delta_Z", &OperatingPoint::delta_Z)
        .def_readwrite("delta_S", &OperatingPoint::delta_S)
        .def_property_readonly("delta_up", &OperatingPoint::delta_up)
        .def_property_readonly("delta_down", &OperatingPoint::delta_down);

    py::class_<ReflectionResult>(m, "ReflectionResult")
        .def_readonly("r_up", &ReflectionResult::r_up)
        .def_readonly("r_down", &ReflectionResult::r_down)
        .def_readonly("theta_up", &ReflectionResult::theta_up)
        .def_readonly("theta_down", &ReflectionResult::theta_down)
        .def_readonly("delta_theta", &ReflectionResult::delta_theta);

    m.def("quantum_dot", &reference::quantum_dot, "Reference quantum-dot cavity parameters");
    m.def("cooperativity", &cooperativity, py::arg("params"));
    m.def("reflection", &reflection, py::arg("params"), py::arg("delta"));
    m.def("controlled_phase", &controlled_phase, py::arg("params"), py::arg("op"));
    m.def("high_C_phase", &high_C_phase, py::arg("params"), py::arg("delta"));
    m.def("zeeman_splitting", [](double g_e, double g_h, double field) {
        return zeeman_splitting({g_e, g_h, field});
    }, py::arg("g_e"), py::arg("g_h"), py::arg("field_tesla"));
    m.def("default_operating_point", [](const CavityParams& p) {
        const auto o = default_operating_point(p);
        return OperatingPoint{o.delta_0, o.delta_Z, 0.0};
    }, py::arg("params"));
    m.def("solve_stark_shift", &solve_stark_shift, py::arg("params"), py::arg("delta_0"), py::arg("delta_Z"),
          py::arg("k"), py::arg("delta_S_max") = reference::kStarkLimitGHz);
    m.def("stark_shift_estimate", &stark_shift_estimate, py::arg("params"), py::arg("k"));
    m.def("phase_curve", [](const CavityParams& p, double lo, double hi, std::size_t points) {
        py::list rows;
        for (const auto& r : phase_curve(p, lo, hi, points))
            rows.append(py::make_tuple(r.delta_S, r.delta_theta, r.r_up_abs, r.r_down_abs));
        return rows;
    }, py::arg("params"), py::arg("delta_S_min"), py::arg("delta_S_max"), py::arg("points"),
       "Rows of (delta_S, delta_theta, |r_up|, |r_down|)");

    // circuit and simulation
    py::enum_<SwapForm>(m, "SwapForm")
        .value("Reflections", SwapForm::Reflections)
        .value("Compact", SwapForm::Compact);

    py::class_<CircuitProgram>(m, "CircuitProgram")
        .def_readonly("arity", &CircuitProgram::arity)
        .def_readonly("cutoff", &CircuitProgram::cutoff)
        .def("__len__", [](const CircuitProgram& p) { return p.gates.size(); })
        .def("gates", [](const CircuitProgram& p) {
            std::vector<std::string> out;
            for (const auto& g : p.gates) out.push_back(to_text(g));
            return out;
        })
        .def("to_text", [](const CircuitProgram& p) { return to_text(p); })
        .def("__eq__", [](const CircuitProgram& a, const CircuitProgram& b) { return a == b; });

    m.def("build_qft_program", [](int n, int K, SwapForm form, bool idle) {
        return build_qft_program(n, K, {form, idle});
    }, py::arg("n"), py::arg("K"), py::arg("swap_form") = SwapForm::Reflections, py::arg("idle_slots") = false);
    m.def("parse_program", &parse_program, py::arg("text"));
    m.def("ideal_qft_unitary", &ideal_qft_unitary, py::arg("n"));
    m.def("simulate_qft", &simulate_qft, py::arg("n"), py::arg("K"), py::arg("amplitudes"),
          "QFT program on a photonic register (photon 1 most significant); returns the decoded output");

    // error budget
    py::class_<NoiseBudget>(m, "NoiseBudget")
        .def(py::init(&make_budget), py::arg("T2_us") = 20.0, py::arg("p") = 0.0, py::arg("T_cycle_ns") = 5.0,
             py::arg("K") = 10, py::arg("cooperativity") = std::nullopt, py::arg("truncate") = false,
             py::arg("delta_S_max") = reference::kStarkLimitGHz)
        .def_readonly("T2_us", &NoiseBudget::T2_us)
        .def_readonly("p", &NoiseBudget::p)
        .def_readonly("T_cycle_ns", &NoiseBudget::T_cycle_ns)
        .def_readonly("K", &NoiseBudget::K);

    m.def("total_distance", [](int N, const NoiseBudget& b) { return report_dict(total_distance(N, b)); },
          py::arg("N"), py::arg("budget"));
    m.def("max_photons", py::overload_cast<const NoiseBudget&>(&max_photons), py::arg("budget"));
    m.attr("UNBOUNDED_PHOTONS") = kUnboundedPhotons;
    m.def("postselection_distance", [](std::vector<double> v) {
        return postselection_distance(MeasurementDiag(std::move(v)));
    }, py::arg("diagonal"));
    m.def("brute_force_postselection", [](std::vector<double> v, int restarts, std::uint64_t seed) {
        const auto r = brute_force_postselection(MeasurementDiag(std::move(v)), {restarts, 4000, 1e-8, seed});
        return py::make_tuple(r.ancilla_free, r.with_ancilla);
    }, py::arg("diagonal"), py::arg("restarts") = 200, py::arg("seed") = reference::kDefaultSeed,
       "(ancilla-free, ancilla-extended) maxima");
    m.def("sweep", [](const std::string& preset_or_json, std::optional<int> n_max) {
        auto scenarios = preset_or_json.find('{') == std::string::npos ? reference::scenario_preset(preset_or_json)
                                                                       : parse_scenarios(preset_or_json);
        if (n_max)
            for (auto& s : scenarios) s.N_max = *n_max;
        py::list rows;
        for (const auto& row : sweep_success(scenarios)) {
            auto d = report_dict(row.report);
            d["scenario_id"] = row.scenario_id;
            rows.append(d);
        }
        return rows;
    }, py::arg("preset_or_json"), py::arg("N_max") = std::nullopt, "Preset name or scenario JSON text");
    m.def("preset_names", &reference::preset_names);
    m.def("validate_bound_small_n", [](int n, const NoiseBudget& b, std::uint64_t seed, int random_inputs) {
        const auto r = validate_bound_small_n(n, b, seed, random_inputs);
        py::dict d;
        d["n"] = r.n;
        d["D"] = r.D;
        d["max_trace_distance"] = r.max_trace_distance;
        d["margin"] = r.margin;
        return d;
    }, py::arg("n"), py::arg("budget"), py::arg("seed") = reference::kDefaultSeed, py::arg("random_inputs") = 20);

    // scheduler
    m.def("compile_timeline", [](int n, int K, double T_cycle_ns, std::optional<double> tau_1,
                                 std::optional<double> tau_2) {
        auto cfg = TimingConfig::with_defaults(n, T_cycle_ns);
        if (tau_1) cfg.tau_1_ns = *tau_1;
        if (tau_2) cfg.tau_2_ns = *tau_2;
        const auto t = compile_timeline(cfg, K);
        const auto rep = validate_timeline(t);
        py::list events;
        for (const auto& e : t.events)
            events.append(py::make_tuple(e.time_ns, to_string(e.kind), e.photon, e.k));
        py::dict d;
        d["events"] = events;
        d["reflect_count"] = rep.reflect_count;
        d["makespan_ns"] = rep.makespan_ns;
        d["atom_idle_cycles"] = rep.atom_idle_cycles;
        d["violations"] = rep.violations;
        d["program"] = timeline_to_program(t);
        return d;
    }, py::arg("n"), py::arg("K"), py::arg("T_cycle_ns") = reference::kCycleNs, py::arg("tau_1_ns") = std::nullopt,
       py::arg("tau_2_ns") = std::nullopt);

    m.def("run_validation_suites", [](std::uint64_t seed) {
        ValidationOptions opt;
        opt.seed = seed;
        py::list out;
        for (const auto& r : run_validation_suites(opt)) out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
    }, py::arg("seed") = reference::kDefaultSeed);
}
