// Copyright 2026 The ssaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSAUDIT_REPORT_H_
#define SSAUDIT_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ssaudit/attack.h"
#include "ssaudit/audit.h"

namespace ssaudit {

// Provenance of one command invocation, written before any result.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, std::string>> resources;
  std::vector<std::pair<std::string, std::string>> adapters;
  std::optional<uint64_t> seed;
  std::string started_at;
  std::vector<std::string> outputs;

  nlohmann::ordered_json ToJson() const;
};

// Current UTC time as ISO-8601 with a trailing Z.
std::string UtcTimestamp();

// Throws kIo when the file cannot be written.
void WriteTextFile(const std::string& path, const std::string& contents);

// Fixed six-decimal rendering used by the CSV and Markdown writers.
std::string FormatReal(double value);

std::string TaxonomyCsv(const TaxonomyReport& report);
std::string TaxonomySwapsCsv(const TaxonomyReport& report);
std::string TaxonomyMarkdown(const TaxonomyReport& report);
nlohmann::ordered_json TaxonomyJson(const TaxonomyReport& report);

std::string CompositionCsv(const CompositionReport& report);
std::string CompositionMarkdown(const CompositionReport& report,
                                const std::string& label);
nlohmann::ordered_json CompositionJson(const CompositionReport& report);

std::string DetectorCsv(const DetectorReport& report);
std::string DetectorMarkdown(const DetectorReport& report);
// Includes the raw positive and negative score arrays.
nlohmann::ordered_json DetectorJson(const DetectorReport& report);

std::string CurveCsv(const CurveReport& report);
std::string CurveMarkdown(const CurveReport& report);
// Includes every per-sample score.
nlohmann::ordered_json CurveJson(const CurveReport& report);

std::string GrammarStressCsv(const GrammarStressReport& report);
std::string GrammarStressMarkdown(const GrammarStressReport& report);
nlohmann::ordered_json GrammarStressJson(const GrammarStressReport& report);

struct AttackSummary {
  size_t inputs = 0;
  size_t skipped = 0;
  size_t successes = 0;
  size_t total_queries = 0;
  size_t total_perturbed = 0;
};
AttackSummary SummarizeAttacks(const std::vector<AttackResult>& results);
std::string AttackCsv(const AttackSummary& summary);
std::string AttackMarkdown(const AttackSummary& summary,
                           const std::string& preset);
nlohmann::ordered_json AttackResultJson(const Sentence& original,
                                        const AttackResult& result);

}  // namespace ssaudit

#endif  // SSAUDIT_REPORT_H_
