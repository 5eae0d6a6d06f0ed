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

#include "mutagate/workspace.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <system_error>

#include "mutagate/digest.hpp"
#include "mutagate/errors.hpp"

namespace mutagate {

namespace fs = std::filesystem;

namespace {

void copy_tree(const fs::path& from, const fs::path& to)
{
    std::error_code ec;
    fs::create_directories(to, ec);
    if (ec)
        throw IoError("cannot create workspace: " + to.string() + ": " + ec.message());

    for (fs::directory_iterator it(from, ec); !ec && it != fs::directory_iterator(); ++it) {
        const fs::directory_entry& entry = *it;
        const fs::path dest = to / entry.path().filename();
        if (entry.is_symlink()) {
            fs::copy_symlink(entry.path(), dest, ec);
        } else if (entry.is_directory()) {
            if (entry.path().filename() == ".git")
                continue;
            copy_tree(entry.path(), dest);
        } else if (entry.is_regular_file()) {
            fs::copy_file(entry.path(), dest, fs::copy_options::overwrite_existing, ec);
        }
        if (ec)
            throw IoError("workspace copy failed: " + entry.path().string() + ": " + ec.message());
    }
    if (ec)
        throw IoError("cannot walk project tree: " + from.string() + ": " + ec.message());
}

}  // namespace

Workspace::Workspace(const fs::path& project_root, fs::path dir) : root_(std::move(dir))
{
    const fs::path abs_root = fs::absolute(project_root).lexically_normal();
    const fs::path abs_ws = fs::absolute(root_).lexically_normal();
    auto mismatch = std::mismatch(abs_root.begin(), abs_root.end(), abs_ws.begin(), abs_ws.end());
    if (mismatch.first == abs_root.end())
        throw ConfigError("workspace directory " + abs_ws.string() +
                          " lies inside the project root; set MUTAGATE_WORKDIR elsewhere");
    copy_tree(project_root, root_);
}

void Workspace::apply(const std::string& relative_file, std::string_view contents)
{
    const fs::path target = root_ / relative_file;
    if (!pristine_.count(relative_file))
        pristine_[relative_file] = read_file(target);
    write_file(target, contents);
}

void Workspace::restore()
{
    for (const auto& [relative_file, bytes] : pristine_)
        write_file(root_ / relative_file, bytes);
    pristine_.clear();
}

fs::path create_workspace_parent()
{
    fs::path base;
    if (const char* env = std::getenv("MUTAGATE_WORKDIR"); env && *env)
        base = env;
    else
        base = fs::temp_directory_path();

    static std::atomic<unsigned> counter{0};
    const unsigned seq = counter.fetch_add(1);
    fs::path dir =
        base / ("mutagate-" + std::to_string(::getpid()) + "-" + std::to_string(seq));
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create workspace parent: " + dir.string() + ": " + ec.message());
    return dir;
}

void remove_tree(const fs::path& dir)
{
    std::error_code ec;
    fs::remove_all(dir, ec);  // best effort
}

}  // namespace mutagate
