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

#include "mutagate/coverage.hpp"

#include <stdexcept>

namespace mutagate {

CoverageSummary compute_coverage(const std::vector<MutantOutcome>& outcomes)
{
    CoverageSummary summary;
    for (const MutantOutcome& outcome : outcomes) {
        switch (outcome.status) {
        case MutantStatus::Killed:
            ++summary.killed;
            break;
        case MutantStatus::TimedOut:
            ++summary.killed;
            ++summary.timed_out;
            break;
        case MutantStatus::Survived:
            ++summary.survived;
            break;
        case MutantStatus::Stillborn:
            ++summary.stillborn;
            break;
        }
    }
    return summary;
}

std::string coverage_percent_text(const CoverageSummary& summary)
{
    const std::int64_t total = summary.total_scored();
    if (total == 0)
        return "n/a";
    // Exact rational rounding to one decimal: per-mille, half up.
    const std::int64_t permille = (summary.killed * 1000 * 2 + total) / (total * 2);
    return std::to_string(permille / 10) + "." + std::to_string(permille % 10) + "%";
}

std::map<std::string, CoverageSummary> aggregate_per_file(
    const std::vector<MutantOutcome>& outcomes,
    const std::map<std::string, std::string>& file_of_mutant)
{
    std::map<std::string, std::vector<MutantOutcome>> partitions;
    for (const MutantOutcome& outcome : outcomes) {
        auto it = file_of_mutant.find(outcome.mutant_id);
        if (it == file_of_mutant.end())
            throw std::invalid_argument("outcome for unknown mutant id: " + outcome.mutant_id);
        partitions[it->second].push_back(outcome);
    }
    std::map<std::string, CoverageSummary> per_file;
    for (const auto& [file, partition] : partitions)
        per_file[file] = compute_coverage(partition);
    return per_file;
}

}  // namespace mutagate
