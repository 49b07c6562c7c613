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

#include "ssaudit/report.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "ssaudit/error.h"

namespace ssaudit {

using nlohmann::ordered_json;

namespace {

ordered_json PairsToJson(const std::vector<std::pair<std::string, std::string>>& kv) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : kv) out[k] = v;
  return out;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json TypeCounts(const std::array<size_t, kSubstitutionTypeCount>& c) {
  ordered_json out = ordered_json::object();
  for (SubstitutionType t : kAllSubstitutionTypes) {
    out[std::string(SubstitutionTypeName(t))] = c[static_cast<size_t>(t)];
  }
  return out;
}

}  // namespace

ordered_json RunManifest::ToJson() const {
  ordered_json j;
  j["command"] = command;
  j["config"] = config;
  j["resources"] = PairsToJson(resources);
  j["adapters"] = PairsToJson(adapters);
  j["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  j["started_at"] = started_at;
  j["outputs"] = outputs;
  return j;
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "cannot write " + path);
  out << contents;
  if (!out) Fail(ErrorCode::kIo, "write failed for " + path);
}

std::string FormatReal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

// ---------------------------------------------------------------------------

std::string TaxonomyCsv(const TaxonomyReport& r) {
  std::ostringstream out;
  out << "type,count,fraction,per_pair\n";
  for (SubstitutionType t : kAllSubstitutionTypes) {
    out << SubstitutionTypeName(t) << ',' << r.Count(t) << ','
        << FormatReal(r.Fraction(t)) << ',' << FormatReal(r.PerPairAverage(t))
        << '\n';
  }
  out << "total," << r.swaps << ',' << FormatReal(r.swaps ? 1.0 : 0.0) << ','
      << FormatReal(r.pairs ? static_cast<double>(r.swaps) / r.pairs : 0.0)
      << '\n';
  out << "no_sense," << r.no_sense << ','
      << FormatReal(r.swaps ? static_cast<double>(r.no_sense) / r.swaps : 0.0)
      << ','
      << FormatReal(r.pairs ? static_cast<double>(r.no_sense) / r.pairs : 0.0)
      << '\n';
  return out.str();
}

std::string TaxonomySwapsCsv(const TaxonomyReport& r) {
  std::ostringstream out;
  out << "pair,position,original,replacement,type,sense\n";
  for (const auto& s : r.records) {
    out << s.pair_index << ',' << s.position << ',' << CsvField(s.original)
        << ',' << CsvField(s.replacement) << ',' << SubstitutionTypeName(s.type)
        << ',' << CsvField(s.sense_id) << '\n';
  }
  return out.str();
}

std::string TaxonomyMarkdown(const TaxonomyReport& r) {
  std::ostringstream out;
  out << "| Type | Count | Fraction (%) | Per pair |\n|---|---:|---:|---:|\n";
  for (SubstitutionType t : kAllSubstitutionTypes) {
    char pct[32];
    std::snprintf(pct, sizeof(pct), "%.1f", 100.0 * r.Fraction(t));
    out << "| " << SubstitutionTypeName(t) << " | " << r.Count(t) << " | "
        << pct << " | " << FormatReal(r.PerPairAverage(t)) << " |\n";
  }
  out << "\nPairs: " << r.pairs << ". Swaps: " << r.swaps
      << ". Swaps without senses: " << r.no_sense << ".\n";
  return out.str();
}

ordered_json TaxonomyJson(const TaxonomyReport& r) {
  ordered_json j;
  j["pairs"] = r.pairs;
  j["swaps"] = r.swaps;
  j["no_sense"] = r.no_sense;
  j["counts"] = TypeCounts(r.counts);
  ordered_json fr = ordered_json::object();
  for (SubstitutionType t : kAllSubstitutionTypes) {
    fr[std::string(SubstitutionTypeName(t))] = r.Fraction(t);
  }
  j["fractions"] = fr;
  ordered_json recs = ordered_json::array();
  for (const auto& s : r.records) {
    recs.push_back({{"pair", s.pair_index},
                    {"position", s.position},
                    {"original", s.original},
                    {"replacement", s.replacement},
                    {"type", SubstitutionTypeName(s.type)},
                    {"sense", s.sense_id}});
  }
  j["records"] = recs;
  return j;
}

// ---------------------------------------------------------------------------

std::string CompositionCsv(const CompositionReport& r) {
  std::ostringstream out;
  out << "type,mean,total\n";
  for (SubstitutionType t : kAllSubstitutionTypes) {
    out << SubstitutionTypeName(t) << ',' << FormatReal(r.Mean(t)) << ','
        << r.totals[static_cast<size_t>(t)] << '\n';
  }
  out << "candidates," << FormatReal(r.MeanCandidates()) << ','
      << r.total_candidates << '\n';
  return out.str();
}

std::string CompositionMarkdown(const CompositionReport& r,
                                const std::string& label) {
  std::ostringstream out;
  out << "| Transformation | Matched | Mismatched | Antonym | Morpheme | Others |\n"
      << "|---|---:|---:|---:|---:|---:|\n";
  char row[256];
  std::snprintf(row, sizeof(row), "| %s | %.2f | %.2f | %.2f | %.2f | %.2f |\n",
                label.c_str(), r.Mean(SubstitutionType::kMatched),
                r.Mean(SubstitutionType::kMismatched),
                r.Mean(SubstitutionType::kAntonym),
                r.Mean(SubstitutionType::kMorphological),
                r.Mean(SubstitutionType::kOther));
  out << row;
  out << "\nPositions: " << r.positions << ". OOV: " << r.oov_positions
      << ". Skipped: " << r.skipped.size() << ".\n";
  return out.str();
}

ordered_json CompositionJson(const CompositionReport& r) {
  ordered_json j;
  j["positions"] = r.positions;
  j["oov_positions"] = r.oov_positions;
  ordered_json means = ordered_json::object();
  for (SubstitutionType t : kAllSubstitutionTypes) {
    means[std::string(SubstitutionTypeName(t))] = r.Mean(t);
  }
  j["means"] = means;
  j["totals"] = TypeCounts(r.totals);
  j["mean_candidates"] = r.MeanCandidates();
  ordered_json per = ordered_json::array();
  for (const auto& p : r.per_position) {
    per.push_back({{"pair", p.pair_index},
                   {"position", p.position},
                   {"word", p.word},
                   {"candidates", p.candidates},
                   {"counts", TypeCounts(p.counts)}});
  }
  j["per_position"] = per;
  ordered_json skipped = ordered_json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back(
        {{"pair", s.pair_index}, {"position", s.position}, {"reason", s.reason}});
  }
  j["skipped"] = skipped;
  return j;
}

// ---------------------------------------------------------------------------

std::string DetectorCsv(const DetectorReport& r) {
  std::ostringstream out;
  out << "type,aupr,positives,negatives\n";
  for (const auto& row : r.rows) {
    out << SwapSourceName(row.type) << ','
        << (row.aupr ? FormatReal(*row.aupr) : std::string()) << ','
        << r.positives.size() << ',' << row.negatives.size() << '\n';
  }
  return out.str();
}

std::string DetectorMarkdown(const DetectorReport& r) {
  std::ostringstream out;
  out << "| Invalid type | AUPR |\n|---|---:|\n";
  for (const auto& row : r.rows) {
    char buf[32] = "n/a";
    if (row.aupr) std::snprintf(buf, sizeof(buf), "%.3f", *row.aupr);
    out << "| " << SwapSourceName(row.type) << " | " << buf << " |\n";
  }
  for (const auto& w : r.warnings) out << "\nWarning: " << w << '\n';
  return out.str();
}

ordered_json DetectorJson(const DetectorReport& r) {
  ordered_json j;
  j["positions"] = r.positions;
  j["oov_positions"] = r.oov_positions;
  j["positives"] = r.positives;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"type", SwapSourceName(row.type)},
                    {"aupr", row.aupr ? ordered_json(*row.aupr) : ordered_json(nullptr)},
                    {"negatives", row.negatives}});
  }
  j["rows"] = rows;
  j["warnings"] = r.warnings;
  return j;
}

// ---------------------------------------------------------------------------

std::string CurveCsv(const CurveReport& r) {
  std::ostringstream out;
  out << "type,n,mean,stdev,samples\n";
  for (const auto& c : r.curves) {
    for (const auto& p : c.points) {
      out << SwapSourceName(c.type) << ',' << p.n << ',' << FormatReal(p.mean)
          << ',' << FormatReal(p.stdev) << ',' << p.samples << '\n';
    }
  }
  return out.str();
}

std::string CurveMarkdown(const CurveReport& r) {
  size_t n_max = 0;
  for (const auto& c : r.curves) n_max = std::max(n_max, c.points.size());
  std::ostringstream out;
  out << "| Type |";
  for (size_t n = 1; n <= n_max; ++n) out << " n=" << n << " |";
  out << "\n|---|";
  for (size_t n = 1; n <= n_max; ++n) out << "---:|";
  out << '\n';
  for (const auto& c : r.curves) {
    out << "| " << SwapSourceName(c.type) << " |";
    for (size_t n = 1; n <= n_max; ++n) {
      if (n <= c.points.size() && c.points[n - 1].samples > 0) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", c.points[n - 1].mean);
        out << ' ' << buf << " |";
      } else {
        out << " |";
      }
    }
    out << '\n';
  }
  if (r.partial) out << "\nPartial result: " << r.error << '\n';
  return out.str();
}

ordered_json CurveJson(const CurveReport& r) {
  ordered_json j;
  j["pairs_used"] = r.pairs_used;
  j["partial"] = r.partial;
  j["error"] = r.error;
  ordered_json curves = ordered_json::array();
  for (const auto& c : r.curves) {
    ordered_json points = ordered_json::array();
    for (const auto& p : c.points) {
      points.push_back({{"n", p.n},
                        {"mean", p.mean},
                        {"stdev", p.stdev},
                        {"samples", p.samples}});
    }
    curves.push_back({{"type", SwapSourceName(c.type)},
                      {"series", c.series},
                      {"empty_series", c.empty_series},
                      {"points", points},
                      {"scores", c.scores}});
  }
  j["curves"] = curves;
  return j;
}

// ---------------------------------------------------------------------------

std::string GrammarStressCsv(const GrammarStressReport& r) {
  std::ostringstream out;
  out << "metric,value\n"
      << "input_sentences," << r.input_sentences << '\n'
      << "used_sentences," << r.used_sentences << '\n'
      << "skipped_with_errors," << r.skipped_with_errors << '\n'
      << "total_converted," << r.total_converted << '\n'
      << "total_detected," << r.total_detected << '\n'
      << "avg_perturbed_verbs," << FormatReal(r.avg_perturbed_verbs) << '\n'
      << "avg_detected_errors," << FormatReal(r.avg_detected_errors) << '\n'
      << "detection_ratio," << FormatReal(r.detection_ratio) << '\n';
  return out.str();
}

std::string GrammarStressMarkdown(const GrammarStressReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "| Sentences | Avg. perturbed verbs | Avg. detected errors | "
                "Detection ratio |\n|---:|---:|---:|---:|\n| %zu | %.2f | %.2f | "
                "%.3f |\n",
                r.used_sentences, r.avg_perturbed_verbs, r.avg_detected_errors,
                r.detection_ratio);
  return buf;
}

ordered_json GrammarStressJson(const GrammarStressReport& r) {
  ordered_json j;
  j["input_sentences"] = r.input_sentences;
  j["used_sentences"] = r.used_sentences;
  j["skipped_with_errors"] = r.skipped_with_errors;
  j["total_converted"] = r.total_converted;
  j["total_detected"] = r.total_detected;
  j["avg_perturbed_verbs"] = r.avg_perturbed_verbs;
  j["avg_detected_errors"] = r.avg_detected_errors;
  j["detection_ratio"] = r.detection_ratio;
  ordered_json recs = ordered_json::array();
  for (const auto& s : r.records) {
    recs.push_back({{"index", s.index},
                    {"original", s.original},
                    {"perturbed", s.perturbed},
                    {"converted", s.converted},
                    {"detected", s.detected}});
  }
  j["records"] = recs;
  return j;
}

// ---------------------------------------------------------------------------

AttackSummary SummarizeAttacks(const std::vector<AttackResult>& results) {
  AttackSummary s;
  s.inputs = results.size();
  for (const auto& r : results) {
    if (r.skipped) {
      ++s.skipped;
      continue;
    }
    s.total_queries += r.queries;
    if (r.success) {
      ++s.successes;
      s.total_perturbed += r.perturbed_indices.size();
    }
  }
  return s;
}

std::string AttackCsv(const AttackSummary& s) {
  const size_t attacked = s.inputs - s.skipped;
  std::ostringstream out;
  out << "metric,value\n"
      << "inputs," << s.inputs << '\n'
      << "skipped," << s.skipped << '\n'
      << "successes," << s.successes << '\n'
      << "success_rate,"
      << FormatReal(attacked ? static_cast<double>(s.successes) / attacked : 0.0)
      << '\n'
      << "avg_queries,"
      << FormatReal(attacked ? static_cast<double>(s.total_queries) / attacked : 0.0)
      << '\n'
      << "avg_perturbed_words,"
      << FormatReal(s.successes ? static_cast<double>(s.total_perturbed) / s.successes
                                : 0.0)
      << '\n';
  return out.str();
}

std::string AttackMarkdown(const AttackSummary& s, const std::string& preset) {
  const size_t attacked = s.inputs - s.skipped;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "| Preset | Attacked | Successes | Success rate (%%) |\n"
                "|---|---:|---:|---:|\n| %s | %zu | %zu | %.2f |\n",
                preset.c_str(), attacked, s.successes,
                attacked ? 100.0 * s.successes / attacked : 0.0);
  return buf;
}

ordered_json AttackResultJson(const Sentence& original, const AttackResult& r) {
  ordered_json j;
  j["original"] = original.Surfaces();
  j["adversarial"] =
      r.adversarial ? ordered_json(r.adversarial->Surfaces()) : ordered_json(nullptr);
  j["success"] = r.success;
  j["skipped"] = r.skipped;
  j["original_label"] = r.original_label;
  j["final_label"] = r.final_label;
  j["perturbed_indices"] = r.perturbed_indices;
  j["queries"] = r.queries;
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.per_step_log) {
    ordered_json scores = ordered_json::object();
    for (const auto& sc : s.scores) {
      scores[sc.name] = sc.value ? ordered_json(*sc.value) : ordered_json(nullptr);
    }
    steps.push_back({{"position", s.position},
                     {"original", s.original_word},
                     {"replacement", s.replacement},
                     {"prob_before", s.prob_before},
                     {"prob_after", s.prob_after},
                     {"label_after", s.label_after},
                     {"scores", scores}});
  }
  j["steps"] = steps;
  return j;
}

}  // namespace ssaudit
