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

#include "mutagate/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "mutagate/errors.hpp"

namespace mutagate {

namespace {

using Json = nlohmann::ordered_json;

std::string short_id(const std::string& id)
{
    return id.substr(0, 12);
}

std::string bar(const CoverageSummary& summary)
{
    if (!summary.has_score())
        return "[   n/a    ]";
    const std::int64_t total = summary.total_scored();
    const auto filled =
        static_cast<std::size_t>((summary.killed * 10 * 2 + total) / (total * 2));
    std::string out = "[";
    out += std::string(filled, '#');
    out += std::string(10 - filled, '.');
    out += "]";
    return out;
}

std::string ratio(const CoverageSummary& summary)
{
    return std::to_string(summary.killed) + "/" + std::to_string(summary.total_scored());
}

std::string flip_heading(const Flip& flip)
{
    std::string out = "[";
    out += mutant_status_name(flip.pre_status);
    out += " → ";
    out += mutant_status_name(flip.post_status);
    out += "] ";
    out += operator_code_name(flip.op);
    out += " ";
    out += flip.file + ":" + std::to_string(flip.line);
    out += "  ";
    out += flip.original.empty() ? "''" : flip.original;
    out += " → ";
    out += flip.replacement.empty() ? "''" : flip.replacement;
    out += "  id ";
    out += short_id(flip.mutant_id);
    if (flip.timing_related)
        out += "  (timing-related)";
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (const std::string& item : items) {
        if (!out.empty())
            out += sep;
        out += item;
    }
    return out;
}

std::string render_text_or_markdown(const DiffReport& report, bool markdown)
{
    std::ostringstream out;
    const std::string h = markdown ? "## " : "";
    const std::string b = markdown ? "- " : "  ";

    if (markdown)
        out << "# mutation diff: " << report.pre_label << " vs " << report.post_label << "\n\n";
    else {
        const std::string title =
            "mutation diff: " + report.pre_label + " vs " + report.post_label;
        out << title << "\n" << std::string(title.size(), '=') << "\n";
    }

    out << "verdict: " << verdict_name(report.verdict);
    if (report.verdict == Verdict::Preserved)
        out << " — behavior preserved";
    out << " (exit status " << exit_status_for(report.verdict) << ")\n";
    if (report.partial_data)
        out << "warning: partial data — at least one run did not execute every mutant; "
               "PRESERVED cannot be concluded\n";
    if (!report.incomparable_reason.empty())
        out << "reason: " << report.incomparable_reason << "\n";
    if (!report.anomalies.empty()) {
        out << "warning: " << report.anomalies.size()
            << " stillborn anomaly(ies) — compile behavior differed between runs:\n";
        for (const Anomaly& anomaly : report.anomalies)
            out << b << short_id(anomaly.mutant_id) << " " << anomaly.file << ":" << anomaly.line
                << "  " << mutant_status_name(anomaly.pre_status) << " → "
                << mutant_status_name(anomaly.post_status) << "\n";
    }
    out << "\n";

    out << h << "flips (" << report.flips.size() << ")"
        << (markdown ? "\n\n" : ":\n");
    for (const Flip& flip : report.flips) {
        out << b << flip_heading(flip) << "\n";
        if (report.traced) {
            if (!flip.traced)
                out << b << "    untraced (no matrix row on one side)\n";
            else if (flip.implicated_tests.empty())
                out << b << "    no single implicated test (verdicts changed only in aggregate)\n";
            else
                out << b << "    implicated tests: " << join(flip.implicated_tests, ", ")
                    << "\n";
        }
    }
    if (report.flips.empty())
        out << b << "none\n";
    out << "\n";

    if (!report.unmatched_pre.empty() || !report.unmatched_post.empty()) {
        out << h << "unmatched mutants" << (markdown ? "\n\n" : ":\n");
        for (const std::string& id : report.unmatched_pre)
            out << b << short_id(id) << " only in " << report.pre_label << "\n";
        for (const std::string& id : report.unmatched_post)
            out << b << short_id(id) << " only in " << report.post_label << "\n";
        out << "\n";
    }

    if (report.traced) {
        out << h << "masked changes (aggregate status equal, per-test verdicts differ)"
            << (markdown ? "\n\n" : ":\n");
        for (const MaskedChange& masked : report.masked) {
            out << b;
            if (!masked.file.empty())
                out << operator_code_name(masked.op) << " " << masked.file << ":" << masked.line
                    << "  " << masked.original << " → "
                    << (masked.replacement.empty() ? "''" : masked.replacement) << "  ";
            out << "id " << short_id(masked.mutant_id)
                << "  tests: " << join(masked.tests, ", ") << "\n";
        }
        if (report.masked.empty())
            out << b << "none\n";
        if (!report.tests_only_pre.empty() || !report.tests_only_post.empty()) {
            out << b << "test ids only in " << report.pre_label << ": "
                << join(report.tests_only_pre, ", ") << "\n";
            out << b << "test ids only in " << report.post_label << ": "
                << join(report.tests_only_post, ", ") << "\n";
        }
        out << "\n";
    }

    out << h << "coverage" << (markdown ? "\n\n" : ":\n");
    if (markdown) {
        out << "| scope | " << report.pre_label << " | " << report.post_label << " |\n";
        out << "|---|---|---|\n";
        out << "| overall | " << coverage_percent_text(report.overall_pre) << " ("
            << ratio(report.overall_pre) << ") | " << coverage_percent_text(report.overall_post)
            << " (" << ratio(report.overall_post) << ") |\n";
        for (const auto& [file, pair] : report.per_file) {
            auto one = [](const std::optional<CoverageSummary>& s) {
                return s ? coverage_percent_text(*s) + " (" + ratio(*s) + ")"
                         : std::string("absent");
            };
            out << "| " << file << " | " << one(pair.pre) << " | " << one(pair.post) << " |\n";
        }
    } else {
        out << "  overall  " << coverage_percent_text(report.overall_pre) << " → "
            << coverage_percent_text(report.overall_post) << "   (" << ratio(report.overall_pre)
            << " → " << ratio(report.overall_post) << ")\n";
        for (const auto& [file, pair] : report.per_file) {
            out << "  " << file << "  ";
            if (pair.pre)
                out << bar(*pair.pre) << " " << coverage_percent_text(*pair.pre);
            else
                out << "absent";
            out << " → ";
            if (pair.post)
                out << bar(*pair.post) << " " << coverage_percent_text(*pair.post);
            else
                out << "absent";
            out << "\n";
        }
    }
    return std::move(out).str();
}

Json coverage_json(const CoverageSummary& summary)
{
    Json j;
    j["killed"] = summary.killed;
    j["survived"] = summary.survived;
    j["stillborn"] = summary.stillborn;
    j["timed_out"] = summary.timed_out;
    j["percent"] = coverage_percent_text(summary);
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

std::string render_machine(const DiffReport& report)
{
    Json j;
    j["report_version"] = 1;
    j["pre_label"] = report.pre_label;
    j["post_label"] = report.post_label;
    j["verdict"] = std::string(verdict_name(report.verdict));
    j["exit_status"] = exit_status_for(report.verdict);
    j["partial_data"] = report.partial_data;
    j["incomparable_reason"] = report.incomparable_reason;

    Json flips = Json::array();
    for (const Flip& flip : report.flips) {
        Json f;
        f["mutant_id"] = flip.mutant_id;
        f["file"] = flip.file;
        f["span"] = Json::array({flip.span_begin, flip.span_end});
        f["line"] = flip.line;
        f["operator"] = std::string(operator_code_name(flip.op));
        f["original"] = flip.original;
        f["replacement"] = flip.replacement;
        f["pre_status"] = std::string(mutant_status_name(flip.pre_status));
        f["post_status"] = std::string(mutant_status_name(flip.post_status));
        f["timing_related"] = flip.timing_related;
        f["traced"] = flip.traced;
        f["implicated_tests"] = flip.implicated_tests;
        flips.push_back(std::move(f));
    }
    j["flips"] = std::move(flips);

    j["unmatched"] = Json::object();
    j["unmatched"]["pre_only"] = report.unmatched_pre;
    j["unmatched"]["post_only"] = report.unmatched_post;

    Json anomalies = Json::array();
    for (const Anomaly& anomaly : report.anomalies) {
        Json a;
        a["mutant_id"] = anomaly.mutant_id;
        a["file"] = anomaly.file;
        a["line"] = anomaly.line;
        a["pre_status"] = std::string(mutant_status_name(anomaly.pre_status));
        a["post_status"] = std::string(mutant_status_name(anomaly.post_status));
        anomalies.push_back(std::move(a));
    }
    j["anomalies"] = std::move(anomalies);

    j["coverage"] = Json::object();
    j["coverage"]["overall_pre"] = coverage_json(report.overall_pre);
    j["coverage"]["overall_post"] = coverage_json(report.overall_post);
    Json per_file = Json::object();
    for (const auto& [file, pair] : report.per_file) {
        Json p;
        p["pre"] = pair.pre ? coverage_json(*pair.pre) : Json(nullptr);
        p["post"] = pair.post ? coverage_json(*pair.post) : Json(nullptr);
        per_file[file] = std::move(p);
    }
    j["coverage"]["per_file"] = std::move(per_file);

    j["traced"] = report.traced;
    Json masked = Json::array();
    for (const MaskedChange& m : report.masked) {
        Json mm;
        mm["mutant_id"] = m.mutant_id;
        mm["file"] = m.file;
        mm["line"] = m.line;
        mm["operator"] = std::string(operator_code_name(m.op));
        mm["original"] = m.original;
        mm["replacement"] = m.replacement;
        mm["tests"] = m.tests;
        masked.push_back(std::move(mm));
    }
    j["masking"] = std::move(masked);
    j["test_renames"] = Json::object();
    j["test_renames"]["pre_only"] = report.tests_only_pre;
    j["test_renames"]["post_only"] = report.tests_only_post;

    return j.dump(2) + "\n";
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name)
{
    if (name == "text") return ReportFormat::Text;
    if (name == "markdown") return ReportFormat::Markdown;
    if (name == "machine") return ReportFormat::Machine;
    return std::nullopt;
}

std::string render_report(const DiffReport& report, ReportFormat format)
{
    switch (format) {
    case ReportFormat::Text: return render_text_or_markdown(report, false);
    case ReportFormat::Markdown: return render_text_or_markdown(report, true);
    case ReportFormat::Machine: return render_machine(report);
    }
    return {};
}

DiffReport parse_machine_report(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw IoError(std::string("machine report is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("report_version").get<int>() != 1)
            throw IoError("unsupported report version");
        DiffReport report;
        report.pre_label = j.at("pre_label").get<std::string>();
        report.post_label = j.at("post_label").get<std::string>();
        report.verdict = *parse_verdict(j.at("verdict").get<std::string>());
        report.partial_data = j.at("partial_data").get<bool>();
        report.incomparable_reason = j.at("incomparable_reason").get<std::string>();
        for (const Json& f : j.at("flips")) {
            Flip flip;
            flip.mutant_id = f.at("mutant_id").get<std::string>();
            flip.file = f.at("file").get<std::string>();
            flip.span_begin = f.at("span").at(0).get<std::size_t>();
            flip.span_end = f.at("span").at(1).get<std::size_t>();
            flip.line = f.at("line").get<std::size_t>();
            flip.op = *parse_operator_code(f.at("operator").get<std::string>());
            flip.original = f.at("original").get<std::string>();
            flip.replacement = f.at("replacement").get<std::string>();
            flip.pre_status = *parse_mutant_status(f.at("pre_status").get<std::string>());
            flip.post_status = *parse_mutant_status(f.at("post_status").get<std::string>());
            flip.timing_related = f.at("timing_related").get<bool>();
            flip.traced = f.at("traced").get<bool>();
            flip.implicated_tests = f.at("implicated_tests").get<std::vector<std::string>>();
            report.flips.push_back(std::move(flip));
        }
        report.unmatched_pre = j.at("unmatched").at("pre_only").get<std::vector<std::string>>();
        report.unmatched_post = j.at("unmatched").at("post_only").get<std::vector<std::string>>();
        for (const Json& a : j.at("anomalies")) {
            Anomaly anomaly;
            anomaly.mutant_id = a.at("mutant_id").get<std::string>();
            anomaly.file = a.at("file").get<std::string>();
            anomaly.line = a.at("line").get<std::size_t>();
            anomaly.pre_status = *parse_mutant_status(a.at("pre_status").get<std::string>());
            anomaly.post_status = *parse_mutant_status(a.at("post_status").get<std::string>());
            report.anomalies.push_back(std::move(anomaly));
        }
        report.overall_pre = coverage_from_json(j.at("coverage").at("overall_pre"));
        report.overall_post = coverage_from_json(j.at("coverage").at("overall_post"));
        for (const auto& [file, p] : j.at("coverage").at("per_file").items()) {
            CoveragePair pair;
            if (!p.at("pre").is_null())
                pair.pre = coverage_from_json(p.at("pre"));
            if (!p.at("post").is_null())
                pair.post = coverage_from_json(p.at("post"));
            report.per_file[file] = pair;
        }
        report.traced = j.at("traced").get<bool>();
        for (const Json& m : j.at("masking")) {
            MaskedChange masked;
            masked.mutant_id = m.at("mutant_id").get<std::string>();
            masked.file = m.at("file").get<std::string>();
            masked.line = m.at("line").get<std::size_t>();
            masked.op = *parse_operator_code(m.at("operator").get<std::string>());
            masked.original = m.at("original").get<std::string>();
            masked.replacement = m.at("replacement").get<std::string>();
            masked.tests = m.at("tests").get<std::vector<std::string>>();
            report.masked.push_back(std::move(masked));
        }
        report.tests_only_pre = j.at("test_renames").at("pre_only").get<std::vector<std::string>>();
        report.tests_only_post =
            j.at("test_renames").at("post_only").get<std::vector<std::string>>();
        return report;
    } catch (const Json::exception& e) {
        throw IoError(std::string("machine report is malformed: ") + e.what());
    }
}

std::string render_run_report(const RunManifest& manifest, ReportFormat format)
{
    if (format == ReportFormat::Machine)
        return manifest_to_string(manifest);

    const bool markdown = format == ReportFormat::Markdown;
    std::ostringstream out;
    if (markdown)
        out << "# mutation run: " << manifest.label << "\n\n";
    else {
        const std::string title = "mutation run: " + manifest.label;
        out << title << "\n" << std::string(title.size(), '=') << "\n";
    }
    const std::string b = markdown ? "- " : "  ";
    out << b << "created: " << manifest.created_at << "\n";
    out << b << "production digest: " << short_id(manifest.production_digest) << "...\n";
    out << b << "config digest: " << short_id(manifest.config_digest) << "...\n";
    if (manifest.partial)
        out << b << "PARTIAL RUN — not every mutant was executed\n";

    const CoverageSummary& overall = manifest.overall;
    if (overall.total_scored() == 0 && overall.stillborn == 0) {
        out << b << "no mutable code (zero mutants)\n";
    } else {
        out << b << "mutants: " << overall.total_scored() << " scored (" << overall.killed
            << " killed";
        if (overall.timed_out > 0)
            out << ", of which " << overall.timed_out << " timed out";
        out << ", " << overall.survived << " survived)";
        if (overall.stillborn > 0)
            out << ", " << overall.stillborn << " stillborn";
        out << "\n";
        if (overall.stillborn > 0)
            out << b << "note: stillborn mutants did not compile; they measure the compiler, "
                   "not the tests, and are excluded from the coverage denominator\n";
    }
    out << "\n";

    if (markdown) {
        out << "| scope | coverage | killed/scored |\n|---|---|---|\n";
        out << "| overall | " << coverage_percent_text(overall) << " | " << ratio(overall)
            << " |\n";
        for (const auto& [file, summary] : manifest.per_file)
            out << "| " << file << " | " << coverage_percent_text(summary) << " | "
                << ratio(summary) << " |\n";
    } else {
        out << "  overall  " << bar(overall) << " " << coverage_percent_text(overall) << "  ("
            << ratio(overall) << ")\n";
        for (const auto& [file, summary] : manifest.per_file)
            out << "  " << file << "  " << bar(summary) << " " << coverage_percent_text(summary)
                << "  (" << ratio(summary) << ")\n";
    }
    return std::move(out).str();
}

}  // namespace mutagate
