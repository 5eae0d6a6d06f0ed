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

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mutagate/operators.hpp"

namespace mutagate {

/// Everything a mutation run needs to know about the target project.
/// Loaded from a sectioned key/value file (see `template_config_text`).
struct BuildConfig {
    std::filesystem::path project_root;

    std::vector<std::string> source_globs;    ///< production files, mutated
    std::vector<std::string> excluded_globs;  ///< never mutated (test code)

    std::string build_command;  ///< builds and runs the whole suite; exit 0 == green
    bool shell = false;         ///< run through /bin/sh -c instead of argv exec

    double timeout_factor = 4.0;
    double timeout_floor_seconds = 10.0;
    int max_workers = 4;
    bool keep_workspaces = false;

    /// A failing build whose output contains one of these substrings is
    /// classified STILLBORN (the mutant did not compile) instead of KILLED.
    std::vector<std::string> stillborn_patterns;

    std::string test_filter_template;  ///< contains {TEST_ID}; empty = no matrix support
    std::string test_list_command;     ///< prints one test id per line

    std::map<std::string, std::string> env_overrides;

    OperatorSet enabled_operators;
};

std::vector<std::string> default_stillborn_patterns();

/// Parse a config file; relative `root` entries resolve against the file's
/// directory. Unknown sections or keys are ConfigErrors.
BuildConfig load_config(const std::filesystem::path& path);

/// Canonical text form of the comparability-relevant fields (sorted keys,
/// normalized values). Excludes the project root and execution knobs
/// (workers, keep_workspaces) so runs from different checkout paths and
/// concurrency levels stay comparable.
std::string canonical_config_text(const BuildConfig& config);

std::string config_digest(const BuildConfig& config);

std::string template_config_text();

/// Relative '/'-separated paths of all production files: matched by
/// source_globs and not by excluded_globs, sorted bytewise.
std::vector<std::string> select_production_files(const BuildConfig& config);

std::string production_digest(const BuildConfig& config);

}  // namespace mutagate
