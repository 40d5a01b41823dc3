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

#include "cavqft/scenario_io.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "cavqft/errors.hpp"
#include "cavqft/reference_params.hpp"
#include "cavqft/table_io.hpp"
#include "json.hpp"

namespace cavqft {

using nlohmann::json;

namespace {

double number_at(const json& obj, const char* key) {
    if (!obj.contains(key)) throw ParseError(std::string("scenario is missing '") + key + "'");
    const auto& v = obj.at(key);
    if (!v.is_number()) throw ParseError(std::string("scenario key '") + key + "' must be a number");
    return v.get<double>();
}

double number_or(const json& obj, const char* key, double fallback) {
    return obj.contains(key) ? number_at(obj, key) : fallback;
}

Scenario parse_one(const json& obj, std::size_t index) {
    if (!obj.is_object()) throw ParseError("scenario entries must be JSON objects");
    Scenario s;
    s.id = obj.value("id", "s" + std::to_string(index));

    if (!obj.contains("T2_us")) throw ParseError("scenario is missing 'T2_us'");
    const auto& t2 = obj.at("T2_us");
    if (t2.is_null() || (t2.is_string() && t2.get<std::string>() == "inf")) {
        s.budget.T2_us = std::numeric_limits<double>::infinity();
    } else {
        s.budget.T2_us = number_at(obj, "T2_us");
    }
    s.budget.p = number_at(obj, "p");
    s.budget.T_cycle_ns = number_at(obj, "T_cycle_ns");
    const double K = number_at(obj, "K");
    if (K != std::floor(K)) throw ParseError("K must be an integer");
    s.budget.K = static_cast<int>(K);
    const double n_max = number_at(obj, "N_max");
    if (n_max != std::floor(n_max) || n_max < 0) throw ParseError("N_max must be a non-negative integer");
    s.N_max = static_cast<int>(n_max);
    if (obj.contains("seed")) {
        if (!obj.at("seed").is_number_unsigned()) throw ParseError("seed must be an unsigned integer");
        s.seed = obj.at("seed").get<std::uint64_t>();
    } else {
        s.seed = reference::kDefaultSeed;
    }

    if (!obj.contains("cooperativity")) throw ParseError("scenario is missing 'cooperativity'");
    const auto& coop = obj.at("cooperativity");
    if (coop.is_string()) {
        if (coop.get<std::string>() != "ideal") throw ParseError("cooperativity must be a number or \"ideal\"");
        s.budget.gates = IdealGates{obj.value("truncate", false)};
    } else if (coop.is_number()) {
        const double kappa = number_or(obj, "kappa_GHz", reference::kAtomDecayGHz);
        const double gamma = number_or(obj, "gamma_GHz", reference::kCavityDecayGHz);
        s.budget.gates = CavityGates{CavityParams::from_cooperativity(coop.get<double>(), kappa, gamma),
                                     number_or(obj, "delta_S_max_GHz", reference::kStarkLimitGHz)};
    } else {
        throw ParseError("cooperativity must be a number or \"ideal\"");
    }
    s.budget.validate();
    return s;
}

}  // namespace

std::vector<Scenario> parse_scenarios(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario config is not valid JSON: ") + e.what());
    }
    const json* list = &doc;
    if (doc.is_object() && doc.contains("scenarios")) list = &doc.at("scenarios");
    std::vector<Scenario> out;
    try {
        if (list->is_array()) {
            for (std::size_t i = 0; i < list->size(); ++i) out.push_back(parse_one((*list)[i], i));
        } else {
            out.push_back(parse_one(*list, 0));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario config: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("scenario config: ") + e.what());
    }
    return out;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
    os << "scenario_id,N,d_p,d_H,d1,sum_dk,sum_dk_star,D,P_s_raw,P_s\n";
    for (const auto& row : rows) {
        const auto& r = row.report;
        os << row.scenario_id << ',' << r.N << ',' << format_sci(r.d_p) << ',' << format_sci(r.d_H) << ','
           << format_sci(r.d_1) << ',' << format_sci(r.sum_dk) << ',' << format_sci(r.sum_dk_star) << ','
           << format_sci(r.D) << ',' << format_sci(r.Ps_raw) << ',' << format_sci(r.Ps) << '\n';
    }
}

std::string sweep_to_json(std::span<const SweepRow> rows) {
    json out = json::array();
    for (const auto& row : rows) {
        const auto& r = row.report;
        out.push_back({{"scenario_id", row.scenario_id},
                       {"N", r.N},
                       {"d_p", r.d_p},
                       {"d_H", r.d_H},
                       {"d1", r.d_1},
                       {"sum_dk", r.sum_dk},
                       {"sum_dk_star", r.sum_dk_star},
                       {"D", r.D},
                       {"P_s_raw", r.Ps_raw},
                       {"P_s", r.Ps}});
    }
    return json{{"rows", out}}.dump(2) + "\n";
}

}  // namespace cavqft
