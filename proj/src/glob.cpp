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

#include "mutagate/glob.hpp"

#include <string>

namespace mutagate {

namespace {

bool match_at(std::string_view pat, std::string_view str)
{
    if (pat.empty())
        return str.empty();

    if (pat.size() >= 2 && pat[0] == '*' && pat[1] == '*') {
        std::string_view rest = pat.substr(2);
        if (!rest.empty() && rest[0] == '/') {
            // "**/" may match an empty prefix.
            if (match_at(rest.substr(1), str))
                return true;
        }
        if (match_at(rest, str))
            return true;
        for (std::size_t i = 0; i < str.size(); ++i)
            if (match_at(pat, str.substr(i + 1)))
                return true;
        return false;
    }

    if (pat[0] == '*') {
        if (match_at(pat.substr(1), str))
            return true;
        for (std::size_t i = 0; i < str.size() && str[i] != '/'; ++i)
            if (match_at(pat.substr(1), str.substr(i + 1)))
                return true;
        return false;
    }

    if (str.empty())
        return false;
    if (pat[0] == '?')
        return str[0] != '/' && match_at(pat.substr(1), str.substr(1));
    return pat[0] == str[0] && match_at(pat.substr(1), str.substr(1));
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path)
{
    return match_at(pattern, path);
}

bool matches_any(const std::vector<std::string>& patterns, std::string_view path)
{
    for (const std::string& pattern : patterns)
        if (glob_match(pattern, path))
            return true;
    return false;
}

}  // namespace mutagate
