// Copyright 2026 The Mutagate Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mutagate/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mutagate/digest.hpp"
#include "mutagate/errors.hpp"
#include "mutagate/glob.hpp"

namespace mutagate {

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t'))
        ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(std::string_view value)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        std::size_t comma = value.find(',', pos);
        if (comma == std::string_view::npos)
            comma = value.size();
        std::string item = trim(value.substr(pos, comma - pos));
        if (!item.empty())
            out.push_back(std::move(item));
        pos = comma + 1;
    }
    return out;
}

bool parse_bool(const std::string& value, const std::string& key)
{
    if (value == "true" || value == "yes" || value == "1")
        return true;
    if (value == "false" || value == "no" || value == "0")
        return false;
    throw ConfigError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

double parse_positive_number(const std::string& value, const std::string& key)
{
    std::size_t used = 0;
    double parsed = 0;
    try {
        parsed = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
    }
    if (used != value.size() || !(parsed > 0) || !std::isfinite(parsed))
        throw ConfigError("config key '" + key + "': expected a positive number, got '" + value + "'");
    return parsed;
}

// Shortest decimal text that still reads back exactly; keeps digests free of
// formatting noise ("4", "4.5", "0.25").
std::string number_text(double v)
{
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

}  // namespace

std::vector<std::string> default_stillborn_patterns()
{
    return {"error:", "compilation terminated", "cannot find symbol",
            "COMPILATION ERROR", "SyntaxError"};
}

BuildConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path.string());

    BuildConfig config;
    config.project_root = path.has_parent_path() ? path.parent_path() : ".";
    config.stillborn_patterns = default_stillborn_patterns();
    config.enabled_operators = all_operators();

    bool stillborn_overridden = false;
    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string text = trim(line);
        if (text.empty() || text[0] == '#' || text[0] == ';')
            continue;
        if (text.front() == '[') {
            if (text.back() != ']')
                throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                                  ": malformed section header");
            section = trim(text.substr(1, text.size() - 2));
            if (section != "project" && section != "build" && section != "matrix" &&
                section != "env")
                throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                                  ": unknown section [" + section + "]");
            continue;
        }
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        const std::string where = path.string() + ":" + std::to_string(lineno);

        if (section == "project") {
            if (key == "root") {
                std::filesystem::path root = value;
                config.project_root = root.is_absolute()
                                          ? root
                                          : (path.has_parent_path() ? path.parent_path() / root
                                                                    : root);
            } else if (key == "sources") {
                auto items = split_list(value);
                config.source_globs.insert(config.source_globs.end(), items.begin(), items.end());
            } else if (key == "excludes") {
                auto items = split_list(value);
                config.excluded_globs.insert(config.excluded_globs.end(), items.begin(),
                                             items.end());
            } else if (key == "operators") {
                config.enabled_operators = parse_operator_set(value);
            } else {
                throw ConfigError(where + ": unknown key '" + key + "' in [project]");
            }
        } else if (section == "build") {
            if (key == "command") {
                config.build_command = value;
            } else if (key == "shell") {
                config.shell = parse_bool(value, key);
            } else if (key == "timeout_factor") {
                config.timeout_factor = parse_positive_number(value, key);
            } else if (key == "timeout_floor") {
                config.timeout_floor_seconds = parse_positive_number(value, key);
            } else if (key == "workers") {
                const double w = parse_positive_number(value, key);
                if (w != std::floor(w) || w > 1024)
                    throw ConfigError(where + ": workers must be a small positive integer");
                config.max_workers = static_cast<int>(w);
            } else if (key == "keep_workspaces") {
                config.keep_workspaces = parse_bool(value, key);
            } else if (key == "stillborn_patterns") {
                if (!stillborn_overridden) {
                    config.stillborn_patterns.clear();
                    stillborn_overridden = true;
                }
                auto items = split_list(value);
                config.stillborn_patterns.insert(config.stillborn_patterns.end(), items.begin(),
                                                 items.end());
            } else {
                throw ConfigError(where + ": unknown key '" + key + "' in [build]");
            }
        } else if (section == "matrix") {
            if (key == "test_filter") {
                config.test_filter_template = value;
            } else if (key == "test_list") {
                config.test_list_command = value;
            } else {
                throw ConfigError(where + ": unknown key '" + key + "' in [matrix]");
            }
        } else if (section == "env") {
            config.env_overrides[key] = value;
        } else {
            throw ConfigError(where + ": key outside of any section");
        }
    }

    if (config.build_command.empty())
        throw ConfigError(path.string() + ": [build] command is required");
    if (config.source_globs.empty())
        throw ConfigError(path.string() + ": [project] sources is required");
    if (!config.test_filter_template.empty() &&
        config.test_filter_template.find("{TEST_ID}") == std::string::npos)
        throw ConfigError(path.string() + ": [matrix] test_filter must contain {TEST_ID}");

    return config;
}

std::string canonical_config_text(const BuildConfig& config)
{
    auto join = [](const std::vector<std::string>& items) {
        std::string out;
        for (const std::string& item : items) {
            if (!out.empty())
                out += ',';
            out += item;
        }
        return out;
    };

    std::string out;
    out += "build_command=" + config.build_command + "\n";
    out += "enabled_operators=" + operator_set_to_string(config.enabled_operators) + "\n";
    for (const auto& [key, value] : config.env_overrides)
        out += "env." + key + "=" + value + "\n";
    out += "excluded_globs=" + join(config.excluded_globs) + "\n";
    out += "shell=" + std::string(config.shell ? "true" : "false") + "\n";
    out += "source_globs=" + join(config.source_globs) + "\n";
    out += "stillborn_patterns=" + join(config.stillborn_patterns) + "\n";
    out += "test_filter_template=" + config.test_filter_template + "\n";
    out += "test_list_command=" + config.test_list_command + "\n";
    out += "timeout_factor=" + number_text(config.timeout_factor) + "\n";
    out += "timeout_floor_seconds=" + number_text(config.timeout_floor_seconds) + "\n";
    return out;
}

std::string config_digest(const BuildConfig& config)
{
    return sha256_hex(canonical_config_text(config));
}

std::string template_config_text()
{
    return R"(# mutagate configuration
[project]
# Project root; relative paths resolve against this file's directory.
root = .
# Production source files to mutate (comma-separated globs).
sources = src/**/*.cpp, src/**/*.hpp
# Files never mutated (test code). Excludes win over sources.
excludes = tests/**
# Mutation operators to apply; defaults to all nine.
# operators = AOR-B, AOR-S, AOR-U, LOR, SOR, ROR, COR, COD, SAOR

[build]
# Builds the project and runs the whole test suite in the workspace root.
# Must exit 0 when every test passes and non-zero when any test fails.
command = sh test.sh
# Run the command through /bin/sh -c instead of direct argv execution.
shell = false
# Per-mutant timeout = max(timeout_floor, timeout_factor * baseline seconds).
timeout_factor = 4
timeout_floor = 10
# Concurrent mutant workspaces.
workers = 4
# Keep per-worker workspaces after the run (for debugging).
keep_workspaces = false
# Output substrings that mark a failing build as a compile error (stillborn).
# stillborn_patterns = error:, compilation terminated

[matrix]
# Per-test run for kill matrices; {TEST_ID} is replaced with one test id.
# test_filter = sh test.sh {TEST_ID}
# Command printing one runnable test id per line.
# test_list = sh test.sh --list

# [env]
# KEY = value
)";
}

std::vector<std::string> select_production_files(const BuildConfig& config)
{
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    if (!fs::exists(config.project_root))
        throw ConfigError("project root does not exist: " + config.project_root.string());

    fs::recursive_directory_iterator it(config.project_root,
                                        fs::directory_options::skip_permission_denied);
    for (const fs::directory_entry& entry : it) {
        if (entry.is_directory() && entry.path().filename() == ".git") {
            it.disable_recursion_pending();
            continue;
        }
        if (!entry.is_regular_file())
            continue;
        std::string rel = fs::relative(entry.path(), config.project_root).generic_string();
        if (matches_any(config.source_globs, rel) && !matches_any(config.excluded_globs, rel))
            files.push_back(std::move(rel));
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::string production_digest(const BuildConfig& config)
{
    return digest_tree(config.project_root, select_production_files(config));
}

}  // namespace mutagate
