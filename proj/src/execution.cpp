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

#include "mutagate/execution.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "mutagate/errors.hpp"
#include "mutagate/process.hpp"
#include "mutagate/workspace.hpp"

namespace mutagate {

namespace {

constexpr std::size_t kExcerptLines = 50;

std::string tail_lines(const std::string& text, std::size_t max_lines)
{
    if (text.empty())
        return text;
    std::size_t lines = 0;
    std::size_t pos = text.size();
    while (pos > 0) {
        --pos;
        if (text[pos] == '\n' && pos != text.size() - 1 && ++lines == max_lines)
            return text.substr(pos + 1);
    }
    return text;
}

bool matches_stillborn(const BuildConfig& config, const std::string& output)
{
    for (const std::string& pattern : config.stillborn_patterns)
        if (!pattern.empty() && output.find(pattern) != std::string::npos)
            return true;
    return false;
}

CommandSpec build_spec(const BuildConfig& config, const std::filesystem::path& workdir,
                       std::optional<double> timeout, const std::string& command)
{
    CommandSpec spec;
    spec.command_line = command;
    spec.shell = config.shell;
    spec.workdir = workdir;
    spec.env = config.env_overrides;
    spec.timeout_seconds = timeout;
    return spec;
}

MutantOutcome classify(const Mutant& mutant, const BuildConfig& config,
                       const CommandResult& result)
{
    MutantOutcome outcome;
    outcome.mutant_id = mutant.id;
    outcome.duration_seconds = result.duration_seconds;
    outcome.log_excerpt = tail_lines(result.output, kExcerptLines);
    if (result.timed_out) {
        outcome.status = MutantStatus::TimedOut;
        return outcome;
    }
    outcome.exit_code = result.exit_code;
    if (result.exit_code == 0)
        outcome.status = MutantStatus::Survived;
    else if (matches_stillborn(config, result.output))
        outcome.status = MutantStatus::Stillborn;
    else
        outcome.status = MutantStatus::Killed;
    return outcome;
}

// One worker's workspace, created lazily and cleaned up unless kept.
class ScopedWorkspace {
public:
    explicit ScopedWorkspace(const BuildConfig& config)
        : keep_(config.keep_workspaces),
          parent_(create_workspace_parent()),
          workspace_(config.project_root, parent_ / "tree")
    {
    }
    ~ScopedWorkspace()
    {
        if (!keep_)
            remove_tree(parent_);
    }
    Workspace& get() { return workspace_; }
    const std::filesystem::path& parent() const { return parent_; }

private:
    bool keep_;
    std::filesystem::path parent_;
    Workspace workspace_;
};

}  // namespace

std::string_view mutant_status_name(MutantStatus status)
{
    switch (status) {
    case MutantStatus::Killed: return "KILLED";
    case MutantStatus::Survived: return "SURVIVED";
    case MutantStatus::TimedOut: return "TIMED_OUT";
    case MutantStatus::Stillborn: return "STILLBORN";
    }
    return "?";
}

std::optional<MutantStatus> parse_mutant_status(std::string_view name)
{
    if (name == "KILLED") return MutantStatus::Killed;
    if (name == "SURVIVED") return MutantStatus::Survived;
    if (name == "TIMED_OUT") return MutantStatus::TimedOut;
    if (name == "STILLBORN") return MutantStatus::Stillborn;
    return std::nullopt;
}

std::string_view cell_status_name(CellStatus status)
{
    switch (status) {
    case CellStatus::Pass: return "PASS";
    case CellStatus::Fail: return "FAIL";
    case CellStatus::TimedOut: return "TIMED_OUT";
    }
    return "?";
}

std::optional<CellStatus> parse_cell_status(std::string_view name)
{
    if (name == "PASS") return CellStatus::Pass;
    if (name == "FAIL") return CellStatus::Fail;
    if (name == "TIMED_OUT") return CellStatus::TimedOut;
    return std::nullopt;
}

double timeout_for(const BuildConfig& config, const Baseline& baseline)
{
    return std::max(config.timeout_floor_seconds,
                    config.timeout_factor * baseline.duration_seconds);
}

Baseline verify_green_suite(const BuildConfig& config)
{
    if (config.build_command.empty())
        throw ConfigError("no build command configured");
    ScopedWorkspace scoped(config);
    const CommandResult result = run_command(
        build_spec(config, scoped.get().root(), std::nullopt, config.build_command));
    if (result.exec_failed)
        throw ConfigError("build command could not be started: " + config.build_command +
                          "\n" + tail_lines(result.output, 5));
    if (result.exit_code != 0)
        throw BaselineError(
            "baseline not green; mutation analysis is meaningless (build exited " +
            std::to_string(result.exit_code) + ")\n" + tail_lines(result.output, kExcerptLines));
    return Baseline{result.duration_seconds};
}

MutantOutcome run_mutant(const Mutant& mutant, const BuildConfig& config, const Baseline& baseline)
{
    ScopedWorkspace scoped(config);
    scoped.get().apply(mutant.point.file, mutant.mutated_source);
    const CommandResult result = run_command(build_spec(
        config, scoped.get().root(), timeout_for(config, baseline), config.build_command));
    if (result.exec_failed)
        throw ConfigError("build command could not be started: " + config.build_command);
    return classify(mutant, config, result);
}

RunResult run_all(const std::vector<Mutant>& mutants, const BuildConfig& config,
                  const Baseline& baseline, const RunHooks& hooks)
{
    RunResult run;
    if (mutants.empty())
        return run;

    const int workers =
        std::max(1, std::min<int>(config.max_workers, static_cast<int>(mutants.size())));
    const double timeout = timeout_for(config, baseline);

    std::mutex mu;
    std::size_t next = 0;
    std::size_t done = 0;
    std::atomic<bool> stop{false};
    std::vector<MutantOutcome> outcomes;
    std::string failure_note;

    auto worker = [&]() {
        std::optional<ScopedWorkspace> scoped;
        try {
            scoped.emplace(config);
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(mu);
            stop = true;
            if (failure_note.empty())
                failure_note = e.what();
            return;
        }
        while (true) {
            std::size_t index;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (stop || next >= mutants.size())
                    return;
                if (hooks.interrupted && hooks.interrupted()) {
                    stop = true;
                    if (failure_note.empty())
                        failure_note = "interrupted";
                    return;
                }
                index = next++;
            }
            const Mutant& mutant = mutants[index];
            try {
                scoped->get().apply(mutant.point.file, mutant.mutated_source);
                const CommandResult result = run_command(build_spec(
                    config, scoped->get().root(), timeout, config.build_command));
                scoped->get().restore();
                if (result.exec_failed)
                    throw ConfigError("build command could not be started: " +
                                      config.build_command);
                MutantOutcome outcome = classify(mutant, config, result);
                std::lock_guard<std::mutex> lock(mu);
                outcomes.push_back(outcome);
                ++done;
                if (hooks.progress)
                    hooks.progress(done, mutants.size(), mutant, outcome);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(mu);
                stop = true;
                if (failure_note.empty())
                    failure_note = e.what();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();

    std::sort(outcomes.begin(), outcomes.end(),
              [](const MutantOutcome& a, const MutantOutcome& b) {
                  return a.mutant_id < b.mutant_id;
              });
    run.outcomes = std::move(outcomes);
    run.partial = run.outcomes.size() != mutants.size();
    run.note = failure_note;
    return run;
}

std::vector<std::string> list_tests(const BuildConfig& config, const Baseline& baseline)
{
    if (config.test_list_command.empty())
        throw ConfigError("no test_list command configured; set [matrix] test_list or pass "
                          "explicit test ids");
    ScopedWorkspace scoped(config);
    const CommandResult result = run_command(build_spec(
        config, scoped.get().root(), timeout_for(config, baseline), config.test_list_command));
    if (result.exec_failed || result.exit_code != 0)
        throw ConfigError("test_list command failed (exit " + std::to_string(result.exit_code) +
                          "):\n" + tail_lines(result.output, 10));

    std::vector<std::string> tests;
    std::istringstream lines(result.output);
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            tests.push_back(line);
    }
    std::sort(tests.begin(), tests.end());
    tests.erase(std::unique(tests.begin(), tests.end()), tests.end());
    return tests;
}

KillMatrix run_kill_matrix(const std::vector<Mutant>& mutants,
                           const std::vector<std::string>& tests, const BuildConfig& config,
                           const Baseline& baseline, const RunHooks& hooks)
{
    if (config.test_filter_template.empty())
        throw ConfigError("kill matrix requires [matrix] test_filter");
    if (config.test_filter_template.find("{TEST_ID}") == std::string::npos)
        throw ConfigError("test_filter must contain the {TEST_ID} placeholder");
    if (tests.empty())
        throw ConfigError("kill matrix requires a non-empty test list");

    KillMatrix matrix;
    matrix.tests = tests;
    std::sort(matrix.tests.begin(), matrix.tests.end());
    matrix.tests.erase(std::unique(matrix.tests.begin(), matrix.tests.end()),
                       matrix.tests.end());

    if (mutants.empty())
        return matrix;

    const int workers =
        std::max(1, std::min<int>(config.max_workers, static_cast<int>(mutants.size())));
    const double timeout = timeout_for(config, baseline);

    std::mutex mu;
    std::size_t next = 0;
    std::size_t done = 0;
    std::atomic<bool> stop{false};
    std::string failure_note;

    auto substitute = [&](const std::string& test_id) {
        std::string cmd = config.test_filter_template;
        std::size_t pos;
        while ((pos = cmd.find("{TEST_ID}")) != std::string::npos)
            cmd.replace(pos, 9, test_id);
        return cmd;
    };

    auto worker = [&]() {
        std::optional<ScopedWorkspace> scoped;
        try {
            scoped.emplace(config);
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(mu);
            stop = true;
            if (failure_note.empty())
                failure_note = e.what();
            return;
        }
        while (true) {
            std::size_t index;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (stop || next >= mutants.size())
                    return;
                if (hooks.interrupted && hooks.interrupted()) {
                    stop = true;
                    return;
                }
                index = next++;
            }
            const Mutant& mutant = mutants[index];
            try {
                scoped->get().apply(mutant.point.file, mutant.mutated_source);
                std::map<std::string, CellStatus> row;
                for (const std::string& test_id : matrix.tests) {
                    const CommandResult result = run_command(build_spec(
                        config, scoped->get().root(), timeout, substitute(test_id)));
                    if (result.exec_failed)
                        throw ConfigError("test_filter command could not be started");
                    row[test_id] = result.timed_out
                                       ? CellStatus::TimedOut
                                       : (result.exit_code == 0 ? CellStatus::Pass
                                                                : CellStatus::Fail);
                }
                scoped->get().restore();
                std::lock_guard<std::mutex> lock(mu);
                matrix.rows[mutant.id] = std::move(row);
                ++done;
                if (hooks.progress)
                    hooks.progress(done, mutants.size(), mutant, MutantOutcome{});
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(mu);
                stop = true;
                if (failure_note.empty())
                    failure_note = e.what();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();

    if (!failure_note.empty())
        throw IoError("kill matrix aborted: " + failure_note);
    return matrix;
}

}  // namespace mutagate
