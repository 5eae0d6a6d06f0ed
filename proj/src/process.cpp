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

#include "mutagate/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <thread>

#include "mutagate/errors.hpp"

namespace mutagate {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kOutputCapBytes = 64 * 1024;
constexpr std::string_view kExecFailMarker = "mutagate: exec failed: ";

void append_capped(std::string& buffer, const char* data, std::size_t len)
{
    buffer.append(data, len);
    if (buffer.size() > kOutputCapBytes)
        buffer.erase(0, buffer.size() - kOutputCapBytes);  // keep the tail
}

}  // namespace

std::vector<std::string> split_command_line(std::string_view line)
{
    std::vector<std::string> words;
    std::string word;
    bool in_word = false;
    char quote = '\0';
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quote == '\'') {
            if (c == '\'')
                quote = '\0';
            else
                word += c;
            continue;
        }
        if (quote == '"') {
            if (c == '"') {
                quote = '\0';
            } else if (c == '\\' && i + 1 < line.size() &&
                       (line[i + 1] == '"' || line[i + 1] == '\\')) {
                word += line[++i];
            } else {
                word += c;
            }
            continue;
        }
        if (c == '\'' || c == '"') {
            quote = c;
            in_word = true;
            continue;
        }
        if (c == '\\' && i + 1 < line.size()) {
            word += line[++i];
            in_word = true;
            continue;
        }
        if (c == ' ' || c == '\t') {
            if (in_word) {
                words.push_back(std::move(word));
                word.clear();
                in_word = false;
            }
            continue;
        }
        word += c;
        in_word = true;
    }
    if (in_word)
        words.push_back(std::move(word));
    return words;
}

CommandResult run_command(const CommandSpec& spec)
{
    std::vector<std::string> argv_storage;
    if (spec.shell) {
        argv_storage = {"/bin/sh", "-c", spec.command_line};
    } else {
        argv_storage = split_command_line(spec.command_line);
        if (argv_storage.empty())
            throw ConfigError("empty command line");
    }

    std::vector<char*> argv;
    argv.reserve(argv_storage.size() + 1);
    for (std::string& word : argv_storage)
        argv.push_back(word.data());
    argv.push_back(nullptr);

    int fds[2];
    if (pipe(fds) != 0)
        throw IoError(std::string("pipe failed: ") + std::strerror(errno));

    const auto start = Clock::now();
    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        throw IoError(std::string("fork failed: ") + std::strerror(errno));
    }

    if (pid == 0) {
        // Child: own process group so a timeout kill reaches build children.
        setpgid(0, 0);
        close(fds[0]);
        dup2(fds[1], STDOUT_FILENO);
        dup2(fds[1], STDERR_FILENO);
        close(fds[1]);
        if (!spec.workdir.empty() && chdir(spec.workdir.c_str()) != 0)
            _exit(127);
        for (const auto& [key, value] : spec.env)
            setenv(key.c_str(), value.c_str(), 1);
        execvp(argv[0], argv.data());
        std::string msg(kExecFailMarker);
        msg += argv_storage[spec.shell ? 2 : 0];
        msg += ": ";
        msg += std::strerror(errno);
        msg += "\n";
        ssize_t ignored = write(STDERR_FILENO, msg.data(), msg.size());
        (void)ignored;
        _exit(127);
    }

    setpgid(pid, pid);  // parent or child wins; both set the same group
    close(fds[1]);
    fcntl(fds[0], F_SETFL, O_NONBLOCK);

    const auto deadline =
        spec.timeout_seconds ? std::optional(start + std::chrono::duration_cast<Clock::duration>(
                                                         std::chrono::duration<double>(
                                                             *spec.timeout_seconds)))
                             : std::nullopt;

    CommandResult result;
    bool pipe_open = true;
    bool child_exited = false;
    bool killed_for_timeout = false;
    int wait_status = 0;
    Clock::time_point exited_at{};
    char buf[4096];

    while (pipe_open || !child_exited) {
        if (pipe_open) {
            pollfd pfd{fds[0], POLLIN, 0};
            if (poll(&pfd, 1, 50) > 0) {
                while (true) {
                    const ssize_t n = read(fds[0], buf, sizeof buf);
                    if (n > 0) {
                        append_capped(result.output, buf, static_cast<std::size_t>(n));
                        continue;
                    }
                    if (n == 0) {
                        close(fds[0]);
                        pipe_open = false;
                    }
                    break;  // n < 0: EAGAIN
                }
            }
        } else {
            std::this_thread::sleep_for(std::chrono::milliseconds(10));
        }

        if (!child_exited && waitpid(pid, &wait_status, WNOHANG) == pid) {
            child_exited = true;
            exited_at = Clock::now();
        }

        if (!child_exited && !killed_for_timeout && deadline && Clock::now() > *deadline) {
            killed_for_timeout = true;
            kill(-pid, SIGTERM);
            std::this_thread::sleep_for(std::chrono::milliseconds(250));
            kill(-pid, SIGKILL);
        }

        // A detached grandchild may hold the write end open forever; give it
        // half a second after the child exits, then stop reading.
        if (child_exited && pipe_open && Clock::now() - exited_at > std::chrono::milliseconds(500)) {
            close(fds[0]);
            pipe_open = false;
        }
    }

    // Nothing from the command's group may outlive the run.
    kill(-pid, SIGKILL);

    result.duration_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.timed_out = killed_for_timeout;
    if (WIFEXITED(wait_status))
        result.exit_code = WEXITSTATUS(wait_status);
    else if (WIFSIGNALED(wait_status))
        result.exit_code = 128 + WTERMSIG(wait_status);
    else
        result.exit_code = -1;
    result.exec_failed = result.exit_code == 127 &&
                         result.output.find(kExecFailMarker) != std::string::npos;
    return result;
}

}  // namespace mutagate
