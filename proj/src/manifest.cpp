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

#include "mutagate/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>

#include "json.hpp"

#include "mutagate/digest.hpp"
#include "mutagate/errors.hpp"

namespace mutagate {

namespace {

using Json = nlohmann::ordered_json;

std::string format_utc(std::time_t t)
{
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json coverage_to_json(const CoverageSummary& summary)
{
    Json j;
    j["killed"] = summary.killed;
    j["survived"] = summary.survived;
    j["stillborn"] = summary.stillborn;
    j["timed_out"] = summary.timed_out;
    return j;
}

CoverageSummary coverage_from_json(const Json& j)
{
    CoverageSummary summary;
    summary.killed = j.at("killed").get<std::int64_t>();
    summary.survived = j.at("survived").get<std::int64_t>();
    summary.stillborn = j.at("stillborn").get<std::int64_t>();
    summary.timed_out = j.at("timed_out").get<std::int64_t>();
    return summary;
}

Json matrix_to_json(const KillMatrix& matrix)
{
    Json j;
    j["tests"] = matrix.tests;
    Json rows = Json::object();
    for (const auto& [mutant, row] : matrix.rows) {
        Json cells = Json::object();
        for (const auto& [test, cell] : row)
            cells[test] = std::string(cell_status_name(cell));
        rows[mutant] = std::move(cells);
    }
    j["rows"] = std::move(rows);
    return j;
}

KillMatrix matrix_from_json(const Json& j)
{
    KillMatrix matrix;
    matrix.tests = j.at("tests").get<std::vector<std::string>>();
    for (const auto& [mutant, cells] : j.at("rows").items()) {
        for (const auto& [test, cell] : cells.items()) {
            const auto parsed = parse_cell_status(cell.get<std::string>());
            if (!parsed)
                throw IoError("manifest: bad matrix cell status '" +
                              cell.get<std::string>() + "'");
            matrix.rows[mutant][test] = *parsed;
        }
    }
    return matrix;
}

}  // namespace

std::string manifest_timestamp(bool wall_clock)
{
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
        char* end = nullptr;
        const long long t = std::strtoll(epoch, &end, 10);
        if (end && *end == '\0')
            return format_utc(static_cast<std::time_t>(t));
    }
    if (wall_clock)
        return format_utc(std::time(nullptr));
    return "1970-01-01T00:00:00Z";
}

std::string manifest_to_string(const RunManifest& manifest)
{
    Json j;
    j["manifest_version"] = manifest.manifest_version;
    j["tool_version"] = manifest.tool_version;
    j["created_at"] = manifest.created_at;
    j["label"] = manifest.label;
    j["config_digest"] = manifest.config_digest;
    j["production_digest"] = manifest.production_digest;
    j["partial"] = manifest.partial;
    j["overall"] = coverage_to_json(manifest.overall);

    Json per_file = Json::object();
    for (const auto& [file, summary] : manifest.per_file)
        per_file[file] = coverage_to_json(summary);
    j["per_file"] = std::move(per_file);

    Json outcomes = Json::array();
    for (const OutcomeRecord& record : manifest.outcomes) {
        Json o;
        o["mutant_id"] = record.mutant_id;
        o["file"] = record.file;
        o["span"] = Json::array({record.span_begin, record.span_end});
        o["line"] = record.line;
        o["operator"] = std::string(operator_code_name(record.op));
        o["original"] = record.original;
        o["replacement"] = record.replacement;
        o["status"] = std::string(mutant_status_name(record.status));
        if (record.exit_code)
            o["exit_code"] = *record.exit_code;
        else
            o["exit_code"] = nullptr;
        o["duration_ms"] = record.duration_ms;
        outcomes.push_back(std::move(o));
    }
    j["outcomes"] = std::move(outcomes);

    if (manifest.kill_matrix)
        j["kill_matrix"] = matrix_to_json(*manifest.kill_matrix);

    return j.dump(2) + "\n";
}

RunManifest manifest_from_string(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw IoError(std::string("manifest is not valid JSON: ") + e.what());
    }

    try {
        RunManifest manifest;
        manifest.manifest_version = j.at("manifest_version").get<int>();
        if (manifest.manifest_version != kManifestVersion)
            throw IoError("unsupported manifest version " +
                          std::to_string(manifest.manifest_version) + " (this tool reads version " +
                          std::to_string(kManifestVersion) + "); no migration path");
        manifest.tool_version = j.at("tool_version").get<std::string>();
        manifest.created_at = j.at("created_at").get<std::string>();
        manifest.label = j.at("label").get<std::string>();
        manifest.config_digest = j.at("config_digest").get<std::string>();
        manifest.production_digest = j.at("production_digest").get<std::string>();
        if (manifest.config_digest.empty() || manifest.production_digest.empty())
            throw IoError("manifest rejected: digest fields must be present and non-empty");
        manifest.partial = j.at("partial").get<bool>();
        manifest.overall = coverage_from_json(j.at("overall"));
        for (const auto& [file, summary] : j.at("per_file").items())
            manifest.per_file[file] = coverage_from_json(summary);

        for (const Json& o : j.at("outcomes")) {
            OutcomeRecord record;
            record.mutant_id = o.at("mutant_id").get<std::string>();
            record.file = o.at("file").get<std::string>();
            record.span_begin = o.at("span").at(0).get<std::size_t>();
            record.span_end = o.at("span").at(1).get<std::size_t>();
            record.line = o.at("line").get<std::size_t>();
            const auto op = parse_operator_code(o.at("operator").get<std::string>());
            if (!op)
                throw IoError("manifest: unknown operator code '" +
                              o.at("operator").get<std::string>() + "'");
            record.op = *op;
            record.original = o.at("original").get<std::string>();
            record.replacement = o.at("replacement").get<std::string>();
            const auto status = parse_mutant_status(o.at("status").get<std::string>());
            if (!status)
                throw IoError("manifest: unknown status '" + o.at("status").get<std::string>() +
                              "'");
            record.status = *status;
            if (!o.at("exit_code").is_null())
                record.exit_code = o.at("exit_code").get<int>();
            record.duration_ms = o.at("duration_ms").get<std::int64_t>();
            manifest.outcomes.push_back(std::move(record));
        }
        std::sort(manifest.outcomes.begin(), manifest.outcomes.end(),
                  [](const OutcomeRecord& a, const OutcomeRecord& b) {
                      return a.mutant_id < b.mutant_id;
                  });

        if (j.contains("kill_matrix"))
            manifest.kill_matrix = matrix_from_json(j.at("kill_matrix"));
        return manifest;
    } catch (const Json::exception& e) {
        throw IoError(std::string("manifest is malformed: ") + e.what());
    }
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path)
{
    write_file(path, manifest_to_string(manifest));
}

RunManifest read_manifest(const std::filesystem::path& path)
{
    return manifest_from_string(read_file(path));
}

OutcomeRecord record_for_point(const std::string& mutant_id, const MutationPoint& point)
{
    OutcomeRecord record;
    record.mutant_id = mutant_id;
    record.file = point.file;
    record.span_begin = point.span_begin;
    record.span_end = point.span_end;
    record.line = point.line;
    record.op = point.op;
    record.original = point.original;
    record.replacement = point.replacement;
    return record;
}

RunManifest build_manifest(std::string label, std::string config_digest,
                           std::string production_digest, std::vector<OutcomeRecord> records,
                           const std::vector<MutantOutcome>& outcomes, bool partial,
                           std::optional<KillMatrix> kill_matrix, bool record_timings)
{
    std::map<std::string, const MutantOutcome*> by_id;
    for (const MutantOutcome& outcome : outcomes)
        by_id[outcome.mutant_id] = &outcome;

    RunManifest manifest;
    manifest.created_at = manifest_timestamp(record_timings);
    manifest.label = std::move(label);
    manifest.config_digest = std::move(config_digest);
    manifest.production_digest = std::move(production_digest);
    manifest.partial = partial;

    std::map<std::string, std::string> file_of_mutant;
    std::vector<MutantOutcome> kept;
    for (OutcomeRecord& record : records) {
        auto it = by_id.find(record.mutant_id);
        if (it == by_id.end())
            continue;  // not executed (partial run)
        const MutantOutcome& outcome = *it->second;
        record.status = outcome.status;
        record.exit_code = outcome.exit_code;
        record.duration_ms =
            record_timings
                ? static_cast<std::int64_t>(std::llround(outcome.duration_seconds * 1000.0))
                : 0;
        file_of_mutant[record.mutant_id] = record.file;
        kept.push_back(outcome);
        manifest.outcomes.push_back(std::move(record));
    }
    std::sort(manifest.outcomes.begin(), manifest.outcomes.end(),
              [](const OutcomeRecord& a, const OutcomeRecord& b) {
                  return a.mutant_id < b.mutant_id;
              });

    manifest.overall = compute_coverage(kept);
    manifest.per_file = aggregate_per_file(kept, file_of_mutant);
    manifest.kill_matrix = std::move(kill_matrix);
    return manifest;
}

}  // namespace mutagate
