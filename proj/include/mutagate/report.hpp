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

#include <optional>
#include <string>

#include "mutagate/diff.hpp"

namespace mutagate {

enum class ReportFormat { Text, Markdown, Machine };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Render a diff: verdict first, then flips with file:line, then a coverage
/// table with textual bars. Machine format is canonical JSON for CI gating
/// and round-trips through parse_machine_report.
std::string render_report(const DiffReport& report, ReportFormat format);

DiffReport parse_machine_report(std::string_view text);

/// Render one run's manifest (label, counts, per-file coverage bars).
std::string render_run_report(const RunManifest& manifest, ReportFormat format);

}  // namespace mutagate
