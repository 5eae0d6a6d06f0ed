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
#include <string_view>

namespace mutagate {

/// A full copy of the project tree that one worker owns exclusively. Mutants
/// are applied by overwriting one file and restored before the next mutant;
/// the original tree is never touched.
class Workspace {
public:
    /// Copies `project_root` (minus any `.git` directory) into `dir`.
    Workspace(const std::filesystem::path& project_root, std::filesystem::path dir);

    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    /// Overwrite one relative file, remembering the pristine bytes.
    void apply(const std::string& relative_file, std::string_view contents);

    /// Put back every file `apply` touched.
    void restore();

    const std::filesystem::path& root() const { return root_; }

private:
    std::filesystem::path root_;
    std::map<std::string, std::string> pristine_;
};

/// Parent directory for workspaces: $MUTAGATE_WORKDIR if set, otherwise the
/// system temp directory. The returned unique subdirectory is created.
std::filesystem::path create_workspace_parent();

void remove_tree(const std::filesystem::path& dir);

}  // namespace mutagate
