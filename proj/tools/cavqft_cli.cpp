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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cavqft/bound_check.hpp"
#include "cavqft/budget.hpp"
#include "cavqft/cavity.hpp"
#include "cavqft/channels.hpp"
#include "cavqft/circuit.hpp"
#include "cavqft/errors.hpp"
#include "cavqft/reference_params.hpp"
#include "cavqft/scenario_io.hpp"
#include "cavqft/scheduler.hpp"
#include "cavqft/state.hpp"
#include "cavqft/table_io.hpp"
#include "cavqft/validation.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace cavqft;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct Common {
    std::string config;
    std::string preset;
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = reference::kDefaultSeed;
};

void add_common(CLI::App* cmd, Common& c, bool with_preset) {
    cmd->add_option("--config", c.config, "JSON configuration file")->check(CLI::ExistingFile);
    if (with_preset) cmd->add_option("--preset", c.preset, "Built-in parameter set");
    cmd->add_option("--out", c.out, "Output path (default: standard output)");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", c.seed, "Random seed");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    try {
        auto j = json::parse(read_file(path));
        if (!j.is_object()) throw ParseError(path + ": expected a JSON object");
        return j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// Writes to --out when given, standard output otherwise.
class Output {
   public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw InvalidArgument("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    bool to_file() const { return file_ != nullptr; }
    /// Where summaries go: standard output when the table went to a file.
    std::ostream& summary() { return file_ ? std::cout : std::cerr; }

   private:
    std::unique_ptr<std::ofstream> file_;
};

// Flag value if given on the command line, else config value, else fallback.
template <typename T>
T pick(const CLI::App* cmd, const char* flag, const T& flag_value, const json& cfg, const char* key,
       const T& fallback) {
    if (cmd->count(flag) > 0) return flag_value;
    if (cfg.contains(key)) {
        try {
            return cfg.at(key).get<T>();
        } catch (const json::exception& e) {
            throw ParseError(std::string("config key '") + key + "': " + e.what());
        }
    }
    return fallback;
}

// ---------------------------------------------------------------- phase-curve

struct PhaseCurveArgs {
    Common common;
    double g = 0, kappa = 0, gamma = 0;
    double s_min = 0, s_max = 0, limit = 0;
    std::size_t points = 0;
    int k_max = 0;
    std::string marks;
};

int run_phase_curve(const CLI::App* cmd, PhaseCurveArgs& a) {
    if (!a.common.preset.empty() && a.common.preset != "quantum-dot") {
        throw ParseError("unknown phase-curve preset '" + a.common.preset + "' (available: quantum-dot)");
    }
    const json cfg = load_config(a.common.config);
    const CavityParams params(pick(cmd, "--g", a.g, cfg, "g_GHz", reference::kCouplingGHz),
                              pick(cmd, "--kappa", a.kappa, cfg, "kappa_GHz", reference::kAtomDecayGHz),
                              pick(cmd, "--gamma", a.gamma, cfg, "gamma_GHz", reference::kCavityDecayGHz));
    const double s_min = pick(cmd, "--delta-s-min", a.s_min, cfg, "delta_S_min_GHz", 0.0);
    const double s_max = pick(cmd, "--delta-s-max", a.s_max, cfg, "delta_S_max_GHz", 250.0);
    const auto points = pick<std::size_t>(cmd, "--points", a.points, cfg, "points", 501);
    const int k_max = pick(cmd, "--k-max", a.k_max, cfg, "k_max", reference::kPhaseCurveMarks);
    const double limit = pick(cmd, "--stark-limit", a.limit, cfg, "stark_limit_GHz", reference::kStarkLimitGHz);

    const auto rows = phase_curve(params, s_min, s_max, points);
    const auto marks = solve_crk_settings(params, k_max, limit);

    std::string marks_path = a.marks;
    if (marks_path.empty() && !a.common.out.empty() && a.common.format == "csv") {
        const std::filesystem::path p(a.common.out);
        marks_path = (p.parent_path() / (p.stem().string() + ".marks.csv")).string();
    }

    Output out(a.common.out);
    if (a.common.format == "json") {
        json curve = json::array(), mk = json::array();
        for (const auto& r : rows) {
            curve.push_back({{"delta_S_GHz", r.delta_S}, {"delta_theta_rad", r.delta_theta},
                             {"r_up_abs", r.r_up_abs}, {"r_down_abs", r.r_down_abs}});
        }
        for (const auto& m : marks) {
            mk.push_back({{"k", m.k}, {"delta_S_GHz", m.point.delta_S}, {"delta_theta_rad", m.delta_theta},
                          {"r_up_abs", m.r_up_abs}, {"r_down_abs", m.r_down_abs}});
        }
        out.stream() << json{{"cooperativity", cooperativity(params)}, {"curve", curve}, {"marks", mk}}.dump(2)
                     << "\n";
        return kExitOk;
    }

    auto& os = out.stream();
    os << "delta_S_GHz,delta_theta_rad,r_up_abs,r_down_abs\n";
    for (const auto& r : rows) {
        os << format_sci(r.delta_S) << ',' << format_sci(r.delta_theta) << ',' << format_sci(r.r_up_abs) << ','
           << format_sci(r.r_down_abs) << '\n';
    }
    if (!marks_path.empty()) {
        std::ofstream mf(marks_path, std::ios::binary);
        if (!mf) throw InvalidArgument("cannot write " + marks_path);
        mf << "k,delta_S_GHz,delta_theta_rad,r_up_abs,r_down_abs\n";
        for (const auto& m : marks) {
            mf << m.k << ',' << format_sci(m.point.delta_S) << ',' << format_sci(m.delta_theta) << ','
               << format_sci(m.r_up_abs) << ',' << format_sci(m.r_down_abs) << '\n';
        }
    }
    return kExitOk;
}

// -------------------------------------------------------------------- success

int run_success(Common& c, std::optional<int> n_max) {
    std::vector<Scenario> scenarios;
    if (!c.preset.empty() && !c.config.empty()) throw ParseError("use either --preset or --config");
    if (!c.preset.empty()) {
        scenarios = reference::scenario_preset(c.preset);
    } else if (!c.config.empty()) {
        scenarios = parse_scenarios(read_file(c.config));
    } else {
        throw ParseError("success needs --preset or --config");
    }
    if (n_max) {
        if (*n_max < 1) throw InvalidArgument("--n-max must be >= 1");
        for (auto& s : scenarios) s.N_max = *n_max;
    }
    const auto rows = sweep_success(scenarios);

    Output out(c.out);
    if (c.format == "json") {
        out.stream() << sweep_to_json(rows);
    } else {
        write_sweep_csv(out.stream(), rows);
    }
    for (const auto& s : scenarios) {
        const int m = max_photons(s.budget);
        out.summary() << s.id << ": max_photons="
                      << (m == kUnboundedPhotons ? std::string("unbounded") : std::to_string(m)) << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------------------- simulate

struct SimulateArgs {
    Common common;
    int n = 0;
    int K = 0;
    std::string input;
    bool noise = false;
    double p = 0, T2 = 0, cycle = 0;
    std::string coop;
};

std::vector<complex_t> photonic_input(const std::string& text, int n, std::mt19937_64& rng) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<complex_t> amps(dim);
    if (text == "random") {
        const auto s = StateVector::random_photonic(n, rng);
        std::copy(s.amplitudes().begin(), s.amplitudes().begin() + static_cast<std::ptrdiff_t>(dim), amps.begin());
        return amps;
    }
    if (text.size() != static_cast<std::size_t>(n)) {
        throw ArityMismatch("input bitstring has " + std::to_string(text.size()) + " bits, expected n=" +
                            std::to_string(n));
    }
    std::size_t x = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1') throw ParseError("input must be a bitstring or 'random'");
        x = (x << 1) | static_cast<std::size_t>(ch - '0');
    }
    amps[x] = 1.0;
    return amps;
}

std::string bits(std::size_t y, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int l = 0; l < n; ++l)
        if ((y >> (n - 1 - l)) & 1U) s[static_cast<std::size_t>(l)] = '1';
    return s;
}

int run_simulate(const CLI::App* cmd, SimulateArgs& a) {
    const json cfg = load_config(a.common.config);
    const int n = pick(cmd, "--n", a.n, cfg, "n", 0);
    if (n < 1) throw InvalidArgument("simulate needs n >= 1");
    const int K = pick(cmd, "--K", a.K, cfg, "K", n);
    const std::string input = pick(cmd, "--input", a.input, cfg, "input", std::string(static_cast<std::size_t>(n), '0'));
    const bool noisy = pick(cmd, "--noise", a.noise, cfg, "noise", false);
    if (n > (noisy ? kMaxDensityPhotons : kMaxPurePhotons)) {
        throw InvalidArgument("n=" + std::to_string(n) + " exceeds the simulation cap of " +
                              std::to_string(noisy ? kMaxDensityPhotons : kMaxPurePhotons));
    }

    std::mt19937_64 rng(a.common.seed);
    const auto logical_in = photonic_input(input, n, rng);
    const auto psi = StateVector::with_atom_ground(n, logical_in);
    Output out(a.common.out);

    if (!noisy) {
        const auto amps = extract_qft_output(simulate_program(build_qft_program(n, K), psi));
        if (a.common.format == "json") {
            json rows = json::array();
            for (std::size_t y = 0; y < amps.size(); ++y) {
                rows.push_back({{"y", bits(y, n)}, {"re", amps[y].real()}, {"im", amps[y].imag()}});
            }
            out.stream() << json{{"n", n}, {"K", K}, {"input", input}, {"amplitudes", rows}}.dump(2) << "\n";
        } else {
            out.stream() << "y,re,im,probability\n";
            for (std::size_t y = 0; y < amps.size(); ++y) {
                out.stream() << bits(y, n) << ',' << format_sci(amps[y].real()) << ',' << format_sci(amps[y].imag())
                             << ',' << format_sci(std::norm(amps[y])) << '\n';
            }
        }
        return kExitOk;
    }

    NoiseBudget budget;
    budget.p = pick(cmd, "--p", a.p, cfg, "p", 0.01);
    budget.T2_us = pick(cmd, "--T2-us", a.T2, cfg, "T2_us", 20.0);
    budget.T_cycle_ns = pick(cmd, "--cycle-ns", a.cycle, cfg, "T_cycle_ns", reference::kCycleNs);
    budget.K = K;
    const std::string coop = pick(cmd, "--cooperativity", a.coop, cfg, "cooperativity", std::string("ideal"));
    if (coop == "ideal") {
        budget.gates = IdealGates{K < n};
    } else {
        double c = 0;
        try {
            std::size_t used = 0;
            c = std::stod(coop, &used);
            if (used != coop.size()) throw std::invalid_argument(coop);
        } catch (const std::exception&) {
            throw ParseError("cooperativity must be a number or 'ideal'");
        }
        budget.gates = CavityGates{CavityParams::from_cooperativity(c, reference::kAtomDecayGHz, reference::kCavityDecayGHz),
                                   reference::kStarkLimitGHz};
    }
    budget.validate();

    const BudgetModel model(budget);
    const auto run = simulate_noisy(noisy_program_for(model, n), DensityMatrix::from_pure(psi),
                                    noise_model_for(model, n));
    const auto target = DensityMatrix::from_pure(simulate_program(build_qft_program(n, n), psi));
    const double td = trace_distance(run.state, target);
    const double D = model.distance(n).D;
    const auto rho = extract_qft_output(run.state);

    if (a.common.format == "json") {
        json entries = json::array();
        for (Eigen::Index r = 0; r < rho.rows(); ++r)
            for (Eigen::Index col = 0; col < rho.cols(); ++col)
                entries.push_back({{"row", bits(static_cast<std::size_t>(r), n)},
                                   {"col", bits(static_cast<std::size_t>(col), n)},
                                   {"re", rho(r, col).real()},
                                   {"im", rho(r, col).imag()}});
        out.stream() << json{{"n", n},
                             {"K", K},
                             {"input", input},
                             {"density_matrix", entries},
                             {"trace_distance", td},
                             {"D", D},
                             {"success_weight", run.success_weight}}
                            .dump(2)
                     << "\n";
    } else {
        out.stream() << "row,col,re,im\n";
        for (Eigen::Index r = 0; r < rho.rows(); ++r)
            for (Eigen::Index col = 0; col < rho.cols(); ++col)
                out.stream() << bits(static_cast<std::size_t>(r), n) << ',' << bits(static_cast<std::size_t>(col), n)
                             << ',' << format_sci(rho(r, col).real()) << ',' << format_sci(rho(r, col).imag()) << '\n';
        out.summary() << "trace_distance=" << format_sci(td) << "\nD=" << format_sci(D)
                      << "\nsuccess_weight=" << format_sci(run.success_weight) << '\n';
    }
    return td <= D + 1e-12 ? kExitOk : kExitFailed;
}

// ------------------------------------------------------------------- timeline

struct TimelineArgs {
    Common common;
    int n = 0;
    int K = 0;
    double cycle = 0, tau1 = 0, tau2 = 0;
};

int run_timeline(const CLI::App* cmd, TimelineArgs& a) {
    const json cfg = load_config(a.common.config);
    const int n = pick(cmd, "--n", a.n, cfg, "n", 0);
    if (n < 1) throw InvalidTiming("timeline needs n >= 1");
    auto timing = TimingConfig::with_defaults(n, pick(cmd, "--cycle-ns", a.cycle, cfg, "T_cycle_ns", reference::kCycleNs));
    timing.tau_1_ns = pick(cmd, "--tau1-ns", a.tau1, cfg, "tau_1_ns", timing.tau_1_ns);
    timing.tau_2_ns = pick(cmd, "--tau2-ns", a.tau2, cfg, "tau_2_ns", timing.tau_2_ns);
    const int K = pick(cmd, "--K", a.K, cfg, "K", n);

    const auto timeline = compile_timeline(timing, K);
    const auto report = validate_timeline(timeline);
    const bool equivalent = timeline_to_program(timeline) == build_qft_program(n, K);

    Output out(a.common.out);
    if (a.common.format == "json") {
        json events = json::array();
        for (const auto& e : timeline.events) {
            json ev{{"time_ns", e.time_ns}, {"event_kind", to_string(e.kind)}, {"photon", e.photon}};
            if (e.kind == EventKind::Reflect || e.kind == EventKind::Bypass) ev["k"] = e.k;
            if (e.kind == EventKind::Reflect) {
                ev["hadamard"] = e.hadamard == PostHadamard::Pair ? "HH" : e.hadamard == PostHadamard::PhotonOnly ? "H" : "";
            }
            if (e.kind == EventKind::SwitchSet) {
                ev["switch"] = e.switch_id;
                ev["position"] = to_string(e.position);
            } else {
                ev["subroutine"] = e.subroutine;
            }
            events.push_back(ev);
        }
        out.stream() << json{{"events", events},
                             {"report",
                              {{"reflect_count", report.reflect_count},
                               {"makespan_ns", report.makespan_ns},
                               {"atom_hadamards", report.atom_hadamards},
                               {"exposure_cycles", report.exposure_cycles},
                               {"atom_idle_cycles", report.atom_idle_cycles},
                               {"violations", report.violations},
                               {"equivalent_to_program", equivalent}}}}
                            .dump(2)
                     << "\n";
    } else {
        write_timeline_csv(out.stream(), timeline);
        auto& s = out.summary();
        s << "reflect_count=" << report.reflect_count << "\nmakespan_ns=" << format_sci(report.makespan_ns)
          << "\natom_hadamards=" << report.atom_hadamards << "\nexposure_cycles=" << report.exposure_cycles
          << "\natom_idle_cycles=" << report.atom_idle_cycles
          << "\nequivalent_to_program=" << (equivalent ? "yes" : "no") << "\nviolations=" << report.violations.size()
          << '\n';
        for (const auto& v : report.violations) s << "violation: " << v << '\n';
    }
    return report.ok() && equivalent ? kExitOk : kExitFailed;
}

// ------------------------------------------------------------------- validate

int run_validate(Common& c) {
    ValidationOptions opt;
    opt.seed = c.seed;
    const auto results = run_validation_suites(opt);
    bool all = true;
    Output out(c.out);
    if (c.format == "json") {
        json suites = json::array();
        for (const auto& r : results) {
            suites.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            all = all && r.passed;
        }
        out.stream() << json{{"seed", c.seed}, {"passed", all}, {"suites", suites}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out.stream() << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
            all = all && r.passed;
        }
    }
    if (!all) {
        std::cerr << "failing suites:";
        for (const auto& r : results)
            if (!r.passed) std::cerr << ' ' << r.name;
        std::cerr << '\n';
    }
    return all ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cavity-QED photonic QFT toolkit"};
    app.require_subcommand(1);

    PhaseCurveArgs pc;
    auto* phase = app.add_subcommand("phase-curve", "Controlled-phase shift versus Stark shift, with CR_k marks");
    add_common(phase, pc.common, true);
    phase->add_option("--g", pc.g, "Coupling g (GHz)");
    phase->add_option("--kappa", pc.kappa, "Atomic decay kappa (GHz)");
    phase->add_option("--gamma", pc.gamma, "Cavity decay gamma (GHz)");
    phase->add_option("--delta-s-min", pc.s_min, "Smallest Stark shift (GHz)");
    phase->add_option("--delta-s-max", pc.s_max, "Largest Stark shift (GHz)");
    phase->add_option("--points", pc.points, "Number of samples");
    phase->add_option("--k-max", pc.k_max, "Largest CR_k order to mark");
    phase->add_option("--stark-limit", pc.limit, "Stark tuning limit for the marks (GHz)");
    phase->add_option("--marks", pc.marks, "CR_k marks CSV (default: <out stem>.marks.csv)");

    Common sc;
    std::optional<int> n_max;
    auto* success = app.add_subcommand("success", "Error budget and success probability sweeps");
    add_common(success, sc, true);
    success->add_option("--n-max", n_max, "Override N_max for every scenario");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run the QFT program on a small register");
    add_common(simulate, sim.common, false);
    simulate->add_option("--n", sim.n, "Number of photons");
    simulate->add_option("--K", sim.K, "Cutoff (default n)");
    simulate->add_option("--input", sim.input, "Input bitstring (photon 1 first) or 'random'");
    simulate->add_flag("--noise", sim.noise, "Simulate with noise and post-selection");
    simulate->add_option("--p", sim.p, "Hadamard error probability");
    simulate->add_option("--T2-us", sim.T2, "Atomic coherence time (us)");
    simulate->add_option("--cycle-ns", sim.cycle, "Operation cycle (ns)");
    simulate->add_option("--cooperativity", sim.coop, "Cooperativity or 'ideal'");

    TimelineArgs tl;
    auto* timeline = app.add_subcommand("timeline", "Compile and check the delay-line schedule");
    add_common(timeline, tl.common, false);
    timeline->add_option("--n", tl.n, "Number of photons");
    timeline->add_option("--K", tl.K, "Cutoff (default n)");
    timeline->add_option("--cycle-ns", tl.cycle, "Operation cycle T (ns)");
    timeline->add_option("--tau1-ns", tl.tau1, "Delay line 1 (default (n+1) T)");
    timeline->add_option("--tau2-ns", tl.tau2, "Delay line 2 (default T/20)");

    Common vc;
    auto* validate = app.add_subcommand("validate", "Run the built-in property suites");
    add_common(validate, vc, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*phase) return run_phase_curve(phase, pc);
        if (*success) return run_success(sc, n_max);
        if (*simulate) return run_simulate(simulate, sim);
        if (*timeline) return run_timeline(timeline, tl);
        if (*validate) return run_validate(vc);
    } catch (const BoundViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
