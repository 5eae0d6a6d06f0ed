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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mutagate/manifest.hpp"

namespace mutagate {

enum class Verdict { Preserved, Changed, Incomparable };

std::string_view verdict_name(Verdict verdict);  // "PRESERVED", ...
std::optional<Verdict> parse_verdict(std::string_view name);

/// CI exit status: PRESERVED -> 0, CHANGED -> 1, INCOMPARABLE -> 2.
int exit_status_for(Verdict verdict);

/// One mutant whose verdict differs between the two runs: the evidence that
/// the refactored tests behave differently.
struct Flip {
    std::string mutant_id;
    std::string file;
    std::size_t span_begin = 0;
    std::size_t span_end = 0;
    std::size_t line = 1;
    OperatorCode op = OperatorCode::AorB;
    std::string original;
    std::string replacement;
    MutantStatus pre_status = MutantStatus::Killed;
    MutantStatus post_status = MutantStatus::Survived;
    bool timing_related = false;  ///< one side is TIMED_OUT

    // Filled by trace_flips.
    bool traced = false;
    std::vector<std::string> implicated_tests;  ///< shared tests whose verdict changed

    bool operator==(const Flip&) const = default;
};

/// STILLBORN on one side only: the compiler, not the tests, behaved
/// differently. Reported but not treated as a test-behavior flip.
struct Anomaly {
    std::string mutant_id;
    std::string file;
    std::size_t line = 1;
    MutantStatus pre_status = MutantStatus::Stillborn;
    MutantStatus post_status = MutantStatus::Stillborn;

    bool operator==(const Anomaly&) const = default;
};

/// Aggregate status equal on both sides, but the per-test rows differ: a
/// behavior change hidden by multiple killing tests.
struct MaskedChange {
    std::string mutant_id;
    std::string file;
    std::size_t line = 1;
    OperatorCode op = OperatorCode::AorB;
    std::string original;
    std::string replacement;
    std::vector<std::string> tests;  ///< shared tests whose verdict changed

    bool operator==(const MaskedChange&) const = default;
};

struct CoveragePair {
    std::optional<CoverageSummary> pre;
    std::optional<CoverageSummary> post;

    bool operator==(const CoveragePair&) const = default;
};

struct DiffReport {
    std::string pre_label;
    std::string post_label;
    Verdict verdict = Verdict::Incomparable;
    bool partial_data = false;
    std::string incomparable_reason;

    std::vector<Flip> flips;  ///< sorted by mutant id
    std::vector<std::string> unmatched_pre;   ///< mutant ids only in pre
    std::vector<std::string> unmatched_post;  ///< mutant ids only in post
    std::vector<Anomaly> anomalies;

    CoverageSummary overall_pre;
    CoverageSummary overall_post;
    std::map<std::string, CoveragePair> per_file;

    // Filled by trace_flips.
    bool traced = false;
    std::vector<MaskedChange> masked;
    std::vector<std::string> tests_only_pre;   ///< test ids seen only pre (renames)
    std::vector<std::string> tests_only_post;  ///< test ids seen only post

    bool operator==(const DiffReport&) const = default;
};

/// Compare two runs. Refuses (INCOMPARABLE) when the production digests
/// differ; never returns PRESERVED from partial data.
DiffReport diff_runs(const RunManifest& pre, const RunManifest& post);

/// Enrich a diff with per-test evidence. For each flip covered by both
/// matrices, lists the shared tests whose PASS/FAIL verdict changed; flips
/// without rows are left marked untraced. Mutants covered by both matrices
/// but absent from the flip list whose rows differ are reported as masked
/// changes. `point_info` (id -> record) supplies file/operator metadata for
/// masked entries; pass the outcomes of either manifest.
DiffReport trace_flips(DiffReport report, const KillMatrix& pre_matrix,
                       const KillMatrix& post_matrix,
                       const std::map<std::string, OutcomeRecord>& point_info = {});

}  // namespace mutagate
