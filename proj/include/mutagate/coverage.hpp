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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mutagate/execution.hpp"

namespace mutagate {

/// Exact integer mutation-coverage counts. Coverage is the rational
/// killed / total_scored; timed-out mutants count as killed (the fault
/// observably changed behavior) and stillborn mutants are excluded from the
/// denominator entirely (they measure the compiler, not the tests).
struct CoverageSummary {
    std::int64_t killed = 0;     ///< includes timed_out
    std::int64_t survived = 0;
    std::int64_t stillborn = 0;  ///< excluded from total_scored
    std::int64_t timed_out = 0;  ///< informational subset of killed

    std::int64_t total_scored() const { return killed + survived; }
    bool has_score() const { return total_scored() > 0; }

    bool operator==(const CoverageSummary&) const = default;
};

CoverageSummary compute_coverage(const std::vector<MutantOutcome>& outcomes);

/// "50.0%" with one exact-rational decimal, or "n/a" when nothing scored.
std::string coverage_percent_text(const CoverageSummary& summary);

/// Partition outcomes by the file each mutant lives in. Throws
/// std::invalid_argument for an outcome whose mutant id is not in the map.
std::map<std::string, CoverageSummary> aggregate_per_file(
    const std::vector<MutantOutcome>& outcomes,
    const std::map<std::string, std::string>& file_of_mutant);

}  // namespace mutagate
