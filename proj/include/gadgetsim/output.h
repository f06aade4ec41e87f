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

// Result serialization: one CSV per table plus a JSON manifest carrying the
// spec echo, seed, version and SHA-256 of every file. Files are written to a
// temporary name and renamed into place, so readers never see partial output.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "gadgetsim/experiments.h"

namespace gadgetsim {

/// 12 significant digits, the precision used for every number written to disk.
std::string format_number(double value);

std::string to_csv(const Table& table);

std::string sha256_hex(const std::string& bytes);

void write_file_atomic(const std::filesystem::path& path, const std::string& content);

struct WrittenFile {
    std::string name;
    std::string sha256;
    std::size_t rows = 0;
};

/// Manifest body. Wall time is excluded so reruns are byte-identical.
nlohmann::json manifest_json(const ExperimentResult& result, const std::vector<WrittenFile>& files);

/// Writes <table>.csv for every table, manifest.json and timing.json into `out_dir`.
std::vector<WrittenFile> write_result(const ExperimentResult& result, const std::filesystem::path& out_dir);

}  // namespace gadgetsim
