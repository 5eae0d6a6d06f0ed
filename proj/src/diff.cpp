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

#include "mutagate/diff.hpp"

#include <algorithm>

namespace mutagate {

std::string_view verdict_name(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Preserved: return "PRESERVED";
    case Verdict::Changed: return "CHANGED";
    case Verdict::Incomparable: return "INCOMPARABLE";
    }
    return "?";
}

std::optional<Verdict> parse_verdict(std::string_view name)
{
    if (name == "PRESERVED") return Verdict::Preserved;
    if (name == "CHANGED") return Verdict::Changed;
    if (name == "INCOMPARABLE") return Verdict::Incomparable;
    return std::nullopt;
}

int exit_status_for(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Preserved: return 0;
    case Verdict::Changed: return 1;
    case Verdict::Incomparable: return 2;
    }
    return 2;
}

DiffReport diff_runs(const RunManifest& pre, const RunManifest& post)
{
    DiffReport report;
    report.pre_label = pre.label;
    report.post_label = post.label;
    report.partial_data = pre.partial || post.partial;
    report.overall_pre = pre.overall;
    report.overall_post = post.overall;
    for (const auto& [file, summary] : pre.per_file)
        report.per_file[file].pre = summary;
    for (const auto& [file, summary] : post.per_file)
        report.per_file[file].post = summary;

    if (pre.production_digest != post.production_digest) {
        report.verdict = Verdict::Incomparable;
        report.incomparable_reason =
            "production digests differ (" + pre.production_digest.substr(0, 12) + "... vs " +
            post.production_digest.substr(0, 12) +
            "...); the comparison requires byte-identical production code, with only the "
            "test code refactored between the two runs";
        return report;
    }

    std::map<std::string, const OutcomeRecord*> post_by_id;
    for (const OutcomeRecord& record : post.outcomes)
        post_by_id[record.mutant_id] = &record;

    std::map<std::string, const OutcomeRecord*> pre_by_id;
    for (const OutcomeRecord& record : pre.outcomes)
        pre_by_id[record.mutant_id] = &record;

    for (const auto& [id, pre_record] : pre_by_id) {
        auto it = post_by_id.find(id);
        if (it == post_by_id.end()) {
            report.unmatched_pre.push_back(id);
            continue;
        }
        const OutcomeRecord* post_record = it->second;
        if (pre_record->status == post_record->status)
            continue;
        if (pre_record->status == MutantStatus::Stillborn ||
            post_record->status == MutantStatus::Stillborn) {
            Anomaly anomaly;
            anomaly.mutant_id = id;
            anomaly.file = pre_record->file;
            anomaly.line = pre_record->line;
            anomaly.pre_status = pre_record->status;
            anomaly.post_status = post_record->status;
            report.anomalies.push_back(std::move(anomaly));
            continue;
        }
        Flip flip;
        flip.mutant_id = id;
        flip.file = pre_record->file;
        flip.span_begin = pre_record->span_begin;
        flip.span_end = pre_record->span_end;
        flip.line = pre_record->line;
        flip.op = pre_record->op;
        flip.original = pre_record->original;
        flip.replacement = pre_record->replacement;
        flip.pre_status = pre_record->status;
        flip.post_status = post_record->status;
        flip.timing_related = pre_record->status == MutantStatus::TimedOut ||
                              post_record->status == MutantStatus::TimedOut;
        report.flips.push_back(std::move(flip));
    }
    for (const auto& [id, record] : post_by_id)
        if (!pre_by_id.count(id))
            report.unmatched_post.push_back(id);

    if (report.partial_data)
        report.verdict = Verdict::Changed;  // never PRESERVED from partial data
    else if (report.flips.empty() && report.unmatched_pre.empty() &&
             report.unmatched_post.empty())
        report.verdict = Verdict::Preserved;
    else
        report.verdict = Verdict::Changed;
    return report;
}

DiffReport trace_flips(DiffReport report, const KillMatrix& pre_matrix,
                       const KillMatrix& post_matrix,
                       const std::map<std::string, OutcomeRecord>& point_info)
{
    report.traced = true;

    std::vector<std::string> shared;
    std::set_intersection(pre_matrix.tests.begin(), pre_matrix.tests.end(),
                          post_matrix.tests.begin(), post_matrix.tests.end(),
                          std::back_inserter(shared));
    std::set_difference(pre_matrix.tests.begin(), pre_matrix.tests.end(),
                        post_matrix.tests.begin(), post_matrix.tests.end(),
                        std::back_inserter(report.tests_only_pre));
    std::set_difference(post_matrix.tests.begin(), post_matrix.tests.end(),
                        pre_matrix.tests.begin(), pre_matrix.tests.end(),
                        std::back_inserter(report.tests_only_post));

    auto changed_tests = [&](const std::map<std::string, CellStatus>& pre_row,
                             const std::map<std::string, CellStatus>& post_row) {
        std::vector<std::string> changed;
        for (const std::string& test : shared) {
            auto a = pre_row.find(test);
            auto b = post_row.find(test);
            if (a == pre_row.end() || b == post_row.end())
                continue;
            if (a->second != b->second)
                changed.push_back(test);
        }
        return changed;
    };

    std::vector<std::string> flipped_ids;
    for (Flip& flip : report.flips) {
        flipped_ids.push_back(flip.mutant_id);
        auto pre_row = pre_matrix.rows.find(flip.mutant_id);
        auto post_row = post_matrix.rows.find(flip.mutant_id);
        if (pre_row == pre_matrix.rows.end() || post_row == post_matrix.rows.end()) {
            flip.traced = false;  // annotated "untraced" in reports
            continue;
        }
        flip.traced = true;
        flip.implicated_tests = changed_tests(pre_row->second, post_row->second);
    }

    for (const auto& [id, pre_row] : pre_matrix.rows) {
        if (std::find(flipped_ids.begin(), flipped_ids.end(), id) != flipped_ids.end())
            continue;
        auto post_row = post_matrix.rows.find(id);
        if (post_row == post_matrix.rows.end())
            continue;
        std::vector<std::string> changed = changed_tests(pre_row, post_row->second);
        if (changed.empty())
            continue;
        MaskedChange masked;
        masked.mutant_id = id;
        if (auto info = point_info.find(id); info != point_info.end()) {
            masked.file = info->second.file;
            masked.line = info->second.line;
            masked.op = info->second.op;
            masked.original = info->second.original;
            masked.replacement = info->second.replacement;
        }
        masked.tests = std::move(changed);
        report.masked.push_back(std::move(masked));
    }

    return report;
}

}  // namespace mutagate
