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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mutagate/coverage.hpp"
#include "mutagate/execution.hpp"

namespace mutagate {

inline constexpr int kManifestVersion = 1;
inline constexpr std::string_view kToolVersion = "1.0.0";

struct OutcomeRecord {
    std::string mutant_id;
    std::string file;
    std::size_t span_begin = 0;
    std::size_t span_end = 0;
    std::size_t line = 1;
    OperatorCode op = OperatorCode::AorB;
    std::string original;
    std::string replacement;
    MutantStatus status = MutantStatus::Survived;
    std::optional<int> exit_code;
    std::int64_t duration_ms = 0;

    bool operator==(const OutcomeRecord&) const = default;
};

/// The persisted record of one full mutation run. Serialization is canonical
/// (fixed member order, sorted outcomes, LF, UTF-8): the same manifest always
/// produces the same bytes. See docs/manifest.md for the exact layout.
struct RunManifest {
    int manifest_version = kManifestVersion;
    std::string tool_version{kToolVersion};
    std::string created_at = "1970-01-01T00:00:00Z";
    std::string label;
    std::string config_digest;
    std::string production_digest;
    bool partial = false;
    CoverageSummary overall;
    std::map<std::string, CoverageSummary> per_file;
    std::vector<OutcomeRecord> outcomes;  ///< sorted by mutant_id
    std::optional<KillMatrix> kill_matrix;

    bool operator==(const RunManifest&) const = default;
};

/// UTC "YYYY-MM-DDThh:mm:ssZ" for the manifest stamp: SOURCE_DATE_EPOCH when
/// set (reproducible-builds convention), otherwise the epoch unless
/// `wall_clock` asks for the real time. Real timestamps make two otherwise
/// identical runs produce different manifest bytes.
std::string manifest_timestamp(bool wall_clock);

std::string manifest_to_string(const RunManifest& manifest);  // canonical bytes
RunManifest manifest_from_string(std::string_view text);      // validates, throws IoError

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);
RunManifest read_manifest(const std::filesystem::path& path);

/// Assemble a manifest from run results: fills each record's status fields
/// from the outcome with the same mutant id, sorts by id and aggregates
/// coverage per file and overall. With `record_timings` false (the default
/// run mode) durations serialize as 0 and the stamp is stable, so identical
/// runs yield byte-identical manifests.
RunManifest build_manifest(std::string label, std::string config_digest,
                           std::string production_digest,
                           std::vector<OutcomeRecord> records,
                           const std::vector<MutantOutcome>& outcomes, bool partial,
                           std::optional<KillMatrix> kill_matrix, bool record_timings);

OutcomeRecord record_for_point(const std::string& mutant_id, const MutationPoint& point);

}  // namespace mutagate
