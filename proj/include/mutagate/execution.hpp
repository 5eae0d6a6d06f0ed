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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mutagate/config.hpp"
#include "mutagate/mutation.hpp"

namespace mutagate {

enum class MutantStatus { Killed, Survived, TimedOut, Stillborn };

std::string_view mutant_status_name(MutantStatus status);  // "KILLED", ...
std::optional<MutantStatus> parse_mutant_status(std::string_view name);

struct MutantOutcome {
    std::string mutant_id;
    MutantStatus status = MutantStatus::Survived;
    std::optional<int> exit_code;  ///< empty when the process never ran to exit
    double duration_seconds = 0.0;
    std::string log_excerpt;

    bool operator==(const MutantOutcome&) const = default;
};

struct Baseline {
    double duration_seconds = 0.0;
};

/// Effective per-command timeout: max(floor, factor * baseline duration).
double timeout_for(const BuildConfig& config, const Baseline& baseline);

/// Run the build on the unmutated tree (in a scratch workspace, so the
/// original tree stays byte-identical). Throws BaselineError when the suite
/// is red and ConfigError when the command cannot be started at all.
Baseline verify_green_suite(const BuildConfig& config);

/// Run one mutant in its own fresh workspace and classify the outcome:
/// exit 0 -> SURVIVED; non-zero matching a stillborn pattern -> STILLBORN;
/// other non-zero -> KILLED; over the timeout -> TIMED_OUT.
MutantOutcome run_mutant(const Mutant& mutant, const BuildConfig& config,
                         const Baseline& baseline);

struct RunHooks {
    /// Called after each mutant completes (from worker threads, serialized).
    std::function<void(std::size_t done, std::size_t total, const Mutant&, const MutantOutcome&)>
        progress;
    /// Polled between mutants; return true to drain and stop.
    std::function<bool()> interrupted;
};

struct RunResult {
    std::vector<MutantOutcome> outcomes;  ///< sorted by mutant id
    bool partial = false;
    std::string note;  ///< why the run is partial, when it is
};

/// Run every mutant, up to max_workers at a time, each worker owning one
/// workspace. Infrastructure errors stop intake, drain in-flight work and
/// mark the result partial.
RunResult run_all(const std::vector<Mutant>& mutants, const BuildConfig& config,
                  const Baseline& baseline, const RunHooks& hooks = {});

enum class CellStatus { Pass, Fail, TimedOut };

std::string_view cell_status_name(CellStatus status);  // "PASS", ...
std::optional<CellStatus> parse_cell_status(std::string_view name);

/// Per-(mutant, test) verdicts. A mutant's aggregate status is KILLED iff any
/// cell in its row is FAIL.
struct KillMatrix {
    std::vector<std::string> tests;  ///< sorted, deduplicated
    std::map<std::string, std::map<std::string, CellStatus>> rows;  ///< mutant id -> test -> cell

    bool operator==(const KillMatrix&) const = default;
};

/// Run test_list_command in a scratch workspace; one test id per line.
std::vector<std::string> list_tests(const BuildConfig& config, const Baseline& baseline);

/// Execute test_filter_template per (mutant, test) pair. Throws ConfigError
/// when the template is missing or lacks {TEST_ID}, or when `tests` is empty.
KillMatrix run_kill_matrix(const std::vector<Mutant>& mutants,
                           const std::vector<std::string>& tests, const BuildConfig& config,
                           const Baseline& baseline, const RunHooks& hooks = {});

}  // namespace mutagate
