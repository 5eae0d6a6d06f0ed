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
#include <string>
#include <string_view>
#include <vector>

namespace mutagate {

/// Streaming SHA-256. `frame` feeds a length-prefixed field so that
/// concatenated fields can never be confused with one another.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(std::string_view bytes);
    void frame(std::string_view field);
    std::string hex_digest();  // finalizes; further updates are invalid

private:
    void* ctx_;
};

std::string sha256_hex(std::string_view bytes);

/// Digest of a set of files under `root`: for each relative path in the given
/// (already sorted) order, frames the path and the file contents.
std::string digest_tree(const std::filesystem::path& root,
                        const std::vector<std::string>& relative_paths);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace mutagate
