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

#include "gadgetsim/output.h"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "gadgetsim/errors.h"
#include "gadgetsim/spec_io.h"

namespace gadgetsim {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value == 0.0 ? 0.0 : value);
    return buf;
}

std::string to_csv(const Table& table) {
    std::ostringstream os;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        os << (c ? "," : "") << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw ContractError("table " + table.name + " has a row of the wrong width");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c ? "," : "") << format_number(row[c]);
        }
        os << '\n';
    }
    return os.str();
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
        throw NumericalError("SHA-256 digest failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot write " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw ConfigError("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ConfigError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

nlohmann::json manifest_json(const ExperimentResult& result, const std::vector<WrittenFile>& files) {
    nlohmann::json summary = nlohmann::json::object();
    for (const auto& [key, value] : result.summary) {
        summary[key] = std::stod(format_number(value));
    }
    nlohmann::json listed = nlohmann::json::array();
    for (const auto& f : files) {
        listed.push_back({{"name", f.name}, {"sha256", f.sha256}, {"rows", f.rows}});
    }
    return {{"schema", "gadgetsim.manifest/1"},
            {"experiment", to_string(result.spec.kind)},
            {"version", result.version},
            {"seed", result.spec.seed},
            {"spec", spec_to_json(result.spec)},
            {"files", listed},
            {"summary", summary}};
}

std::vector<WrittenFile> write_result(const ExperimentResult& result, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir)) {
        throw ConfigError("output directory " + out_dir.string() + " is not writable");
    }
    // Render everything before touching the directory so a failure leaves no partial set.
    std::vector<std::pair<std::string, std::string>> rendered;
    std::vector<WrittenFile> files;
    for (const auto& table : result.tables) {
        std::string csv = to_csv(table);
        files.push_back({table.name + ".csv", sha256_hex(csv), table.rows.size()});
        rendered.emplace_back(table.name + ".csv", std::move(csv));
    }
    rendered.emplace_back("manifest.json", manifest_json(result, files).dump(2) + "\n");
    nlohmann::json timing{{"experiment", to_string(result.spec.kind)}, {"wall_time_s", result.wall_time_s}};
    rendered.emplace_back("timing.json", timing.dump(2) + "\n");
    for (const auto& [name, content] : rendered) {
        write_file_atomic(out_dir / name, content);
    }
    return files;
}

}  // namespace gadgetsim
