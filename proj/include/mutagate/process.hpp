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
#include <optional>
#include <string>
#include <vector>

namespace mutagate {

struct CommandSpec {
    std::string command_line;
    bool shell = false;  ///< false: quote-aware argv split + execvp; true: /bin/sh -c
    std::filesystem::path workdir;
    std::map<std::string, std::string> env;  ///< overrides on top of the inherited env
    std::optional<double> timeout_seconds;
};

struct CommandResult {
    int exit_code = -1;   ///< WEXITSTATUS, or 128+signal when signalled
    bool timed_out = false;
    bool exec_failed = false;  ///< the command itself could not be started
    double duration_seconds = 0.0;
    std::string output;  ///< merged stdout+stderr, tail-capped
};

/// Run one command: own process group, merged output capture, wall-clock
/// timeout (SIGTERM then SIGKILL to the whole group). Throws IoError only on
/// infrastructure failures (pipe/fork); a missing executable is reported via
/// `exec_failed` + exit code 127.
CommandResult run_command(const CommandSpec& spec);

/// POSIX-ish split: whitespace separates words; single and double quotes
/// group; backslash escapes the next character outside single quotes.
std::vector<std::string> split_command_line(std::string_view line);

}  // namespace mutagate
