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

#pragma once

// JSON experiment specs. A spec names its schema version and experiment kind;
// every other field falls back to the kind's defaults. Unknown fields are
// rejected with the offending path in the message.
//
//   {"schema": "gadgetsim.experiment/1", "kind": "ghz", "seed": 42,
//    "config": {"n_data": 5, "gamma": 8, "alpha": 1, "driver": "five-body"},
//    "time_grid": {"linspace": {"start": 0, "stop": 4, "points": 200, "unit": "pi"}},
//    "gamma_grid": [2, 4, 8, 16]}

#include <filesystem>
#include <string>

#include "json.hpp"

#include "gadgetsim/experiments.h"

namespace gadgetsim {

inline constexpr const char* kSpecSchema = "gadgetsim.experiment/1";

ExperimentSpec parse_spec(const std::string& text);
ExperimentSpec load_spec(const std::filesystem::path& path);

nlohmann::json config_to_json(const GadgetConfig& config);
/// Fields absent from `j` keep their values in `base`.
GadgetConfig config_from_json(const nlohmann::json& j, const GadgetConfig& base, const std::string& where = "config");

/// Fully expanded echo (grids as explicit arrays); parse_spec(dump) reproduces the spec.
nlohmann::json spec_to_json(const ExperimentSpec& spec);

}  // namespace gadgetsim
