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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mutagate/operators.hpp"

namespace mutagate {

/// One place in one file where one operator can inject one fault.
struct MutationPoint {
    std::string file;  ///< relative path, '/'-separated
    std::size_t token_index = 0;
    std::size_t span_begin = 0;
    std::size_t span_end = 0;
    std::size_t line = 1;
    std::string original;
    OperatorCode op = OperatorCode::AorB;
    std::string replacement;  ///< empty for COD (token deletion)

    bool operator==(const MutationPoint&) const = default;
};

/// A single-fault copy of one file. `id` is a content hash of
/// (file, operator, span start, original, replacement), so the same point on
/// the same source bytes gets the same id on every run and machine.
struct Mutant {
    std::string id;
    MutationPoint point;
    std::string mutated_source;
};

/// Find every mutation point in `source` for the enabled operators. Tokens
/// inside strings, chars and comments are never candidates. Candidates whose
/// splice would disturb any neighboring token are dropped, so every returned
/// point yields a mutant differing from the input in exactly one token.
/// Points are ordered by span.
std::vector<MutationPoint> enumerate_points(const std::string& file, std::string_view source,
                                            const OperatorSet& enabled_operators);

/// Splice a point's replacement into `source`. Throws StalePointError when the
/// span no longer holds the original text.
std::string apply_point(const MutationPoint& point, std::string_view source);

std::string mutant_id(const MutationPoint& point);

std::vector<Mutant> generate_mutants(const std::vector<MutationPoint>& points,
                                     std::string_view source);

}  // namespace mutagate
