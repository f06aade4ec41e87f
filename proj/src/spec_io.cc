// Copyright 2026 The gadgetsim Authors
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

#include "gadgetsim/spec_io.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "gadgetsim/errors.h"

namespace gadgetsim {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) {
        throw SpecError(where + ": expected an object");
    }
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!ok.count(it.key())) {
            throw SpecError("unknown field '" + (where.empty() ? it.key() : where + "." + it.key()) + "'");
        }
    }
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw SpecError(where + ": expected a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw SpecError(where + ": expected a finite number");
    }
    return v;
}

int integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw SpecError(where + ": expected an integer");
    }
    return j.get<int>();
}

bool boolean(const json& j, const std::string& where) {
    if (!j.is_boolean()) {
        throw SpecError(where + ": expected true or false");
    }
    return j.get<bool>();
}

std::string text(const json& j, const std::string& where) {
    if (!j.is_string()) {
        throw SpecError(where + ": expected a string");
    }
    return j.get<std::string>();
}

std::vector<double> spaced(const json& j, const std::string& where, bool logarithmic) {
    require_object(j, where);
    reject_unknown(j, where, {"start", "stop", "points", "unit"});
    for (const char* key : {"start", "stop", "points"}) {
        if (!j.contains(key)) throw SpecError(where + ": missing field '" + key + "'");
    }
    double start = number(j["start"], where + ".start");
    double stop = number(j["stop"], where + ".stop");
    int points = integer(j["points"], where + ".points");
    double scale = 1.0;
    if (j.contains("unit")) {
        std::string unit = text(j["unit"], where + ".unit");
        if (unit == "pi") {
            scale = std::numbers::pi;
        } else if (unit != "1") {
            throw SpecError(where + ".unit: expected \"1\" or \"pi\"");
        }
    }
    if (points < 1) throw SpecError(where + ".points: must be >= 1");
    if (logarithmic && !(start > 0.0 && stop > 0.0)) throw SpecError(where + ": logspace bounds must be positive");
    std::vector<double> out;
    for (int k = 0; k < points; ++k) {
        double f = points == 1 ? 0.0 : static_cast<double>(k) / (points - 1);
        double v = logarithmic ? std::pow(10.0, std::log10(start) + (std::log10(stop) - std::log10(start)) * f)
                               : start + (stop - start) * f;
        out.push_back(v * scale);
    }
    return out;
}

std::vector<double> grid(const json& j, const std::string& where) {
    if (j.is_array()) {
        std::vector<double> out;
        for (std::size_t k = 0; k < j.size(); ++k) {
            out.push_back(number(j[k], where + "[" + std::to_string(k) + "]"));
        }
        return out;
    }
    if (j.is_object()) {
        reject_unknown(j, where, {"linspace", "logspace"});
        if (j.size() != 1) throw SpecError(where + ": expected exactly one of linspace or logspace");
        if (j.contains("linspace")) return spaced(j["linspace"], where + ".linspace", false);
        return spaced(j["logspace"], where + ".logspace", true);
    }
    throw SpecError(where + ": expected an array or a {linspace|logspace} object");
}

}  // namespace

json config_to_json(const GadgetConfig& config) {
    return json{{"n_data", config.n_data},         {"kinked", config.kinked},
                {"gamma", config.gamma},           {"alpha", config.alpha},
                {"driver", to_string(config.driver)}, {"single_x_beta", config.single_x_beta}};
}

GadgetConfig config_from_json(const json& j, const GadgetConfig& base, const std::string& where) {
    require_object(j, where);
    reject_unknown(j, where, {"n_data", "kinked", "gamma", "alpha", "driver", "single_x_beta"});
    GadgetConfig c = base;
    if (j.contains("n_data")) c.n_data = integer(j["n_data"], where + ".n_data");
    if (j.contains("kinked")) c.kinked = boolean(j["kinked"], where + ".kinked");
    if (j.contains("gamma")) c.gamma = number(j["gamma"], where + ".gamma");
    if (j.contains("alpha")) c.alpha = number(j["alpha"], where + ".alpha");
    if (j.contains("single_x_beta")) c.single_x_beta = number(j["single_x_beta"], where + ".single_x_beta");
    if (j.contains("driver")) {
        try {
            c.driver = parse_driver(text(j["driver"], where + ".driver"));
        } catch (const SpecError&) {
            throw;
        } catch (const ConfigError& e) {
            throw SpecError(where + ".driver: " + e.what());
        }
    }
    return c;
}

ExperimentSpec parse_spec(const std::string& source) {
    json j;
    try {
        j = json::parse(source);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("spec is not valid JSON: ") + e.what());
    }
    require_object(j, "spec");
    reject_unknown(j, "", {"schema", "kind", "seed", "config", "time_grid", "gamma_grid", "eta_grid", "repetitions",
                           "corrected_drive"});
    if (!j.contains("schema")) throw SpecError("missing field 'schema'");
    if (text(j["schema"], "schema") != kSpecSchema) {
        throw SpecError("schema: unsupported version '" + j["schema"].get<std::string>() + "' (expected " +
                        kSpecSchema + ")");
    }
    if (!j.contains("kind")) throw SpecError("missing field 'kind'");
    ExperimentKind kind;
    try {
        kind = parse_experiment_kind(text(j["kind"], "kind"));
    } catch (const SpecError&) {
        throw;
    } catch (const ConfigError& e) {
        throw SpecError(std::string("kind: ") + e.what());
    }

    ExperimentSpec s = ExperimentSpec::defaults(kind);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw SpecError("seed: expected a non-negative integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("config")) s.config = config_from_json(j["config"], s.config);
    if (j.contains("time_grid")) s.time_grid = grid(j["time_grid"], "time_grid");
    if (j.contains("gamma_grid")) s.gamma_grid = grid(j["gamma_grid"], "gamma_grid");
    if (j.contains("eta_grid")) s.eta_grid = grid(j["eta_grid"], "eta_grid");
    if (j.contains("repetitions")) s.repetitions = integer(j["repetitions"], "repetitions");
    if (j.contains("corrected_drive")) s.corrected_drive = boolean(j["corrected_drive"], "corrected_drive");
    try {
        s.validate();
    } catch (const SpecError&) {
        throw;
    } catch (const ConfigError& e) {
        throw SpecError(std::string("invalid spec: ") + e.what());
    }
    return s;
}

ExperimentSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw SpecError("cannot read spec file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

json spec_to_json(const ExperimentSpec& spec) {
    return json{{"schema", kSpecSchema},
                {"kind", to_string(spec.kind)},
                {"seed", spec.seed},
                {"config", config_to_json(spec.config)},
                {"time_grid", spec.time_grid},
                {"gamma_grid", spec.gamma_grid},
                {"eta_grid", spec.eta_grid},
                {"repetitions", spec.repetitions},
                {"corrected_drive", spec.corrected_drive}};
}

}  // namespace gadgetsim
