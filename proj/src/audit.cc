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

#include "ssaudit/audit.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "ssaudit/error.h"
#include "ssaudit/parallel.h"
#include "ssaudit/random.h"
#include "ssaudit/text_util.h"

namespace ssaudit {

std::string_view SubstitutionTypeName(SubstitutionType type) {
  switch (type) {
    case SubstitutionType::kMatched: return "matched";
    case SubstitutionType::kMismatched: return "mismatched";
    case SubstitutionType::kMorphological: return "morphological";
    case SubstitutionType::kAntonym: return "antonym";
    case SubstitutionType::kOther: return "other";
  }
  return "other";
}

std::optional<SubstitutionType> ParseSubstitutionType(std::string_view name) {
  const std::string n = CaseFold(name);
  for (SubstitutionType t : kAllSubstitutionTypes) {
    if (SubstitutionTypeName(t) == n) return t;
  }
  if (n == "morpheme") return SubstitutionType::kMorphological;
  if (n == "others") return SubstitutionType::kOther;
  return std::nullopt;
}

std::string_view SwapSourceName(SwapSource source) {
  switch (source) {
    case SwapSource::kMatched: return "matched";
    case SwapSource::kMismatched: return "mismatched";
    case SwapSource::kMorphological: return "morphological";
    case SwapSource::kAntonym: return "antonym";
    case SwapSource::kRandomHigh: return "random_high";
    case SwapSource::kRandomLow: return "random_low";
  }
  return "matched";
}

std::optional<SwapSource> ParseSwapSource(std::string_view name) {
  std::string n = CaseFold(Trim(name));
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "morpheme") return SwapSource::kMorphological;
  for (SwapSource s : {SwapSource::kMatched, SwapSource::kMismatched,
                       SwapSource::kMorphological, SwapSource::kAntonym,
                       SwapSource::kRandomHigh, SwapSource::kRandomLow}) {
    if (SwapSourceName(s) == n) return s;
  }
  return std::nullopt;
}

std::vector<SwapSource> ParseSwapSourceList(std::string_view list) {
  std::vector<SwapSource> out;
  size_t start = 0;
  while (start <= list.size()) {
    size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    const std::string item = Trim(list.substr(start, comma - start));
    if (!item.empty()) {
      auto s = ParseSwapSource(item);
      if (!s) Fail(ErrorCode::kInvalidArgument, "unknown substitution type '" + item + "'");
      if (std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
    }
    start = comma + 1;
  }
  if (out.empty()) Fail(ErrorCode::kInvalidArgument, "empty type list");
  return out;
}

bool IsRandomSource(SwapSource source) {
  return source == SwapSource::kRandomHigh || source == SwapSource::kRandomLow;
}

const std::set<std::string>& SetFor(const SubstitutionProfile& profile,
                                    SwapSource source) {
  switch (source) {
    case SwapSource::kMatched: return profile.matched;
    case SwapSource::kMismatched: return profile.mismatched;
    case SwapSource::kMorphological: return profile.morphological;
    case SwapSource::kAntonym: return profile.antonyms;
    default: break;
  }
  Fail(ErrorCode::kInvalidArgument, "random sources have no lexical set");
}

SubstitutionType ClassifySubstitution(const SubstitutionProfile& profile,
                                      std::string_view replacement) {
  const std::string r = CaseFold(replacement);
  if (r == CaseFold(profile.word)) {
    Fail(ErrorCode::kNotASubstitution,
         "replacement '" + r + "' equals the original word");
  }
  if (profile.morphological.count(r)) return SubstitutionType::kMorphological;
  if (profile.matched.count(r)) return SubstitutionType::kMatched;
  if (profile.mismatched.count(r)) return SubstitutionType::kMismatched;
  if (profile.antonyms.count(r)) return SubstitutionType::kAntonym;
  return SubstitutionType::kOther;
}

std::vector<SubstitutionProfile> PerturbedProfiles(const AdversarialPair& pair,
                                                   const Lexicon& lexicon) {
  const Sentence tagged = PosTag(pair.original, lexicon);
  std::vector<SubstitutionProfile> out;
  out.reserve(pair.perturbed_indices.size());
  for (size_t i : pair.perturbed_indices) {
    out.push_back(BuildSubstitutionProfile(tagged, i, lexicon));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Taxonomy

double TaxonomyReport::Fraction(SubstitutionType type) const {
  return swaps == 0 ? 0.0 : static_cast<double>(Count(type)) / swaps;
}

double TaxonomyReport::PerPairAverage(SubstitutionType type) const {
  return pairs == 0 ? 0.0 : static_cast<double>(Count(type)) / pairs;
}

TaxonomyReport AuditPairs(const std::vector<AdversarialPair>& pairs,
                          const Lexicon& lexicon, int jobs) {
  auto per_pair = ParallelMap<std::vector<ClassifiedSwap>>(
      pairs.size(), jobs, [&](size_t p) {
        const AdversarialPair& pair = pairs[p];
        std::vector<ClassifiedSwap> swaps;
        const auto profiles = PerturbedProfiles(pair, lexicon);
        for (size_t j = 0; j < profiles.size(); ++j) {
          const size_t i = pair.perturbed_indices[j];
          ClassifiedSwap s;
          s.pair_index = p;
          s.position = i;
          s.original = pair.original[i].lower;
          s.replacement = pair.adversarial[i].lower;
          s.sense_id = profiles[j].matched_sense_id;
          s.type = s.original == s.replacement
                       ? SubstitutionType::kOther
                       : ClassifySubstitution(profiles[j], s.replacement);
          swaps.push_back(std::move(s));
        }
        return swaps;
      });

  TaxonomyReport report;
  report.pairs = pairs.size();
  for (auto& swaps : per_pair) {
    for (auto& s : swaps) {
      ++report.swaps;
      ++report.counts[static_cast<size_t>(s.type)];
      if (s.sense_id.empty()) ++report.no_sense;
      report.records.push_back(std::move(s));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Candidate composition

double CompositionReport::Mean(SubstitutionType type) const {
  return positions == 0
             ? 0.0
             : static_cast<double>(totals[static_cast<size_t>(type)]) / positions;
}

double CompositionReport::MeanCandidates() const {
  return positions == 0 ? 0.0
                        : static_cast<double>(total_candidates) / positions;
}

namespace {

struct PairComposition {
  std::vector<PositionComposition> positions;
  std::vector<SkippedPosition> skipped;
  size_t oov = 0;
};

}  // namespace

CompositionReport CandidateComposition(const std::vector<AdversarialPair>& pairs,
                                       const Transform& transform,
                                       const Lexicon& lexicon, int jobs) {
  auto per_pair = ParallelMap<PairComposition>(
      pairs.size(), jobs, [&](size_t p) {
        const AdversarialPair& pair = pairs[p];
        const Sentence tagged = PosTag(pair.original, lexicon);
        PairComposition out;
        for (size_t i : pair.perturbed_indices) {
          CandidateSet set;
          try {
            set = transform(tagged, i);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kAdapter &&
                e.code() != ErrorCode::kEmptyPrediction) {
              throw;
            }
            out.skipped.push_back({p, i, e.what()});
            continue;
          }
          if (set.oov) {
            ++out.oov;
            continue;
          }
          const SubstitutionProfile profile =
              BuildSubstitutionProfile(tagged, i, lexicon);
          PositionComposition pc;
          pc.pair_index = p;
          pc.position = i;
          pc.word = tagged[i].lower;
          for (const Candidate& c : set.candidates) {
            if (CaseFold(c.word) == pc.word) continue;
            ++pc.candidates;
            ++pc.counts[static_cast<size_t>(ClassifySubstitution(profile, c.word))];
          }
          out.positions.push_back(std::move(pc));
        }
        return out;
      });

  CompositionReport report;
  for (auto& pc : per_pair) {
    report.oov_positions += pc.oov;
    for (auto& s : pc.skipped) report.skipped.push_back(std::move(s));
    for (auto& pos : pc.positions) {
      ++report.positions;
      report.total_candidates += pos.candidates;
      for (size_t t = 0; t < kSubstitutionTypeCount; ++t) {
        report.totals[t] += pos.counts[t];
      }
      report.per_position.push_back(std::move(pos));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// AUPR and the embedding-similarity detector

double Aupr(const std::vector<double>& positive_scores,
            const std::vector<double>& negative_scores) {
  if (positive_scores.empty() || negative_scores.empty()) {
    Fail(ErrorCode::kInsufficientData,
         "AUPR needs at least one positive and one negative score");
  }
  std::vector<std::pair<double, bool>> ranked;
  ranked.reserve(positive_scores.size() + negative_scores.size());
  for (double s : positive_scores) ranked.emplace_back(s, true);
  for (double s : negative_scores) ranked.emplace_back(s, false);
  for (const auto& [s, _] : ranked) {
    if (std::isnan(s)) Fail(ErrorCode::kInvalidArgument, "NaN score");
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return !a.second && b.second;
  });
  double sum = 0.0;
  size_t hits = 0;
  for (size_t r = 0; r < ranked.size(); ++r) {
    if (!ranked[r].second) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(r + 1);
  }
  return sum / static_cast<double>(positive_scores.size());
}

namespace {

void CheckBand(const FrequencyTable* table, FrequencyBand band) {
  if (!table) Fail(ErrorCode::kInvalidArgument, "random types need a frequency table");
  if (band.hi <= band.lo || band.lo == 0) {
    Fail(ErrorCode::kInvalidArgument, "empty frequency band");
  }
  if (band.hi - 1 > table->size()) {
    Fail(ErrorCode::kBandOutOfRange,
         "frequency table has " + std::to_string(table->size()) +
             " words; band needs rank " + std::to_string(band.hi - 1));
  }
}

// Up to n band words other than exclude, in sampled order.
std::vector<std::string> BandWords(const FrequencyTable& table,
                                   FrequencyBand band, size_t n,
                                   const std::string& exclude, uint64_t seed) {
  const size_t width = band.hi - band.lo;
  std::vector<std::string> drawn =
      SampleFrequencyBand(table, band, std::min(n + 1, width), seed);
  std::vector<std::string> out;
  for (auto& w : drawn) {
    if (out.size() == n) break;
    if (CaseFold(w) != exclude) out.push_back(CaseFold(w));
  }
  return out;
}

uint64_t PositionSeed(uint64_t seed, size_t pair, size_t position,
                      SwapSource source) {
  return MixSeed(MixSeed(MixSeed(seed, pair), position),
                 static_cast<uint64_t>(source));
}

struct PairScores {
  std::vector<double> positives;
  std::vector<std::vector<double>> negatives;
  size_t positions = 0;
  size_t oov = 0;
};

}  // namespace

DetectorReport DetectorEval(const std::vector<AdversarialPair>& pairs,
                            const Lexicon& lexicon, const VectorStore& store,
                            const FrequencyTable* frequencies,
                            const DetectorConfig& cfg, int jobs) {
  DetectorReport report;
  std::vector<SwapSource> types;
  for (SwapSource t : cfg.types) {
    if (t == SwapSource::kMatched) {
      report.warnings.push_back("matched is the positive class; skipped as a negative type");
      continue;
    }
    if (t == SwapSource::kRandomHigh) CheckBand(frequencies, cfg.high_band);
    if (t == SwapSource::kRandomLow) CheckBand(frequencies, cfg.low_band);
    types.push_back(t);
  }

  auto per_pair = ParallelMap<PairScores>(pairs.size(), jobs, [&](size_t p) {
    const AdversarialPair& pair = pairs[p];
    PairScores out;
    out.negatives.resize(types.size());
    const auto profiles = PerturbedProfiles(pair, lexicon);
    for (size_t j = 0; j < profiles.size(); ++j) {
      const SubstitutionProfile& prof = profiles[j];
      const size_t i = pair.perturbed_indices[j];
      auto xi = store.IndexOf(prof.word);
      if (!xi) {
        ++out.oov;
        continue;
      }
      ++out.positions;
      auto score = [&](const std::string& w) -> std::optional<double> {
        auto v = store.IndexOf(w);
        if (!v) return std::nullopt;
        return store.RowCosine(*xi, *v);
      };
      for (const auto& m : prof.matched) {
        if (auto s = score(m)) out.positives.push_back(*s);
      }
      for (size_t t = 0; t < types.size(); ++t) {
        std::vector<std::string> words;
        if (IsRandomSource(types[t])) {
          const FrequencyBand band = types[t] == SwapSource::kRandomHigh
                                         ? cfg.high_band
                                         : cfg.low_band;
          words = BandWords(*frequencies, band, cfg.random_per_position,
                            prof.word, PositionSeed(cfg.seed, p, i, types[t]));
        } else {
          const auto& set = SetFor(prof, types[t]);
          words.assign(set.begin(), set.end());
        }
        for (const auto& w : words) {
          if (auto s = score(w)) out.negatives[t].push_back(*s);
        }
      }
    }
    return out;
  });

  for (auto& ps : per_pair) {
    report.positions += ps.positions;
    report.oov_positions += ps.oov;
    report.positives.insert(report.positives.end(), ps.positives.begin(),
                            ps.positives.end());
  }
  for (size_t t = 0; t < types.size(); ++t) {
    DetectorRow row;
    row.type = types[t];
    for (const auto& ps : per_pair) {
      row.negatives.insert(row.negatives.end(), ps.negatives[t].begin(),
                           ps.negatives[t].end());
    }
    if (report.positives.empty() || row.negatives.empty()) {
      report.warnings.push_back(
          std::string(SwapSourceName(types[t])) + ": no " +
          (report.positives.empty() ? "matched-sense" : "negative") +
          " scores; AUPR omitted");
    } else {
      row.aupr = Aupr(report.positives, row.negatives);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Swap series and encoder sensitivity

SwapSeries BuildSwapSeries(const AdversarialPair& pair, SwapSource type,
                           size_t n_max, uint64_t seed,
                           const SeriesResources& resources) {
  if (!resources.lexicon) Fail(ErrorCode::kInvalidArgument, "swap series needs a lexicon");
  return BuildSwapSeries(pair, PerturbedProfiles(pair, *resources.lexicon),
                         type, n_max, seed, resources);
}

SwapSeries BuildSwapSeries(const AdversarialPair& pair,
                           const std::vector<SubstitutionProfile>& profiles,
                           SwapSource type, size_t n_max, uint64_t seed,
                           const SeriesResources& resources) {
  if (profiles.size() != pair.perturbed_indices.size()) {
    Fail(ErrorCode::kInvalidArgument, "profiles do not match the pair");
  }
  const bool random = IsRandomSource(type);
  const FrequencyBand band =
      type == SwapSource::kRandomHigh ? resources.high_band : resources.low_band;
  if (random) CheckBand(resources.frequencies, band);

  // O is shuffled once per seed so every type sees the same order.
  std::vector<size_t> slots(profiles.size());
  std::iota(slots.begin(), slots.end(), 0);
  Rng order_rng(MixSeed(seed, 0));
  order_rng.Shuffle(slots);

  Rng pick_rng(MixSeed(seed, 1 + static_cast<uint64_t>(type)));
  SwapSeries series{pair.original, type, {}, {}, {}, seed};
  for (size_t slot : slots) {
    if (series.order.size() == n_max) break;
    const SubstitutionProfile& prof = profiles[slot];
    const size_t i = pair.perturbed_indices[slot];
    std::string word;
    if (random) {
      auto words = BandWords(*resources.frequencies, band, 1, prof.word,
                             pick_rng.Below(UINT64_MAX));
      if (words.empty()) continue;
      word = words.front();
    } else {
      const auto& set = SetFor(prof, type);
      if (set.empty()) continue;
      word = *std::next(set.begin(), static_cast<long>(pick_rng.Below(set.size())));
    }
    series.order.push_back(i);
    series.replacements.push_back(std::move(word));
  }
  if (series.order.empty()) {
    Fail(ErrorCode::kEmptySeries, "no perturbed position has a non-empty " +
                                      std::string(SwapSourceName(type)) + " set");
  }
  Sentence current = pair.original;
  for (size_t j = 0; j < series.order.size(); ++j) {
    const size_t i = series.order[j];
    current = current.WithReplacement(
        i, MatchCase(pair.original[i].surface, series.replacements[j]));
    series.variants.push_back(current);
  }
  return series;
}

namespace {

struct PairCurves {
  // scores[type][n - 1]
  std::vector<std::vector<std::vector<double>>> scores;
  std::vector<size_t> series;
  std::vector<size_t> empty;
  std::optional<std::string> error;
};

std::string WindowText(const Sentence& s, size_t i,
                       const std::optional<size_t>& window) {
  return window ? WindowExtract(s, i, *window).Text() : s.Text();
}

CurvePoint Summarize(size_t n, const std::vector<double>& xs) {
  CurvePoint p;
  p.n = n;
  p.samples = xs.size();
  if (xs.empty()) return p;
  p.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - p.mean) * (x - p.mean);
    p.stdev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return p;
}

}  // namespace

CurveReport EncoderSensitivityCurve(const std::vector<AdversarialPair>& pairs,
                                    const SentenceEncoder& encoder,
                                    const SeriesResources& resources,
                                    const CurveConfig& cfg, int jobs) {
  if (!resources.lexicon) Fail(ErrorCode::kInvalidArgument, "curve needs a lexicon");
  if (cfg.n_max == 0) Fail(ErrorCode::kInvalidArgument, "n_max must be at least 1");
  for (SwapSource t : cfg.types) {
    if (t == SwapSource::kRandomHigh) CheckBand(resources.frequencies, resources.high_band);
    if (t == SwapSource::kRandomLow) CheckBand(resources.frequencies, resources.low_band);
  }
  const size_t nt = cfg.types.size();

  auto per_pair = ParallelMap<PairCurves>(pairs.size(), jobs, [&](size_t p) {
    PairCurves out;
    out.scores.assign(nt, std::vector<std::vector<double>>(cfg.n_max));
    out.series.assign(nt, 0);
    out.empty.assign(nt, 0);
    const AdversarialPair& pair = pairs[p];
    const auto profiles = PerturbedProfiles(pair, *resources.lexicon);
    const uint64_t pair_seed = MixSeed(cfg.seed, p);
    for (size_t t = 0; t < nt; ++t) {
      std::optional<SwapSeries> series;
      try {
        series = BuildSwapSeries(pair, profiles, cfg.types[t], cfg.n_max,
                                 pair_seed, resources);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptySeries) throw;
        ++out.empty[t];
        continue;
      }
      ++out.series[t];
      std::vector<std::string> texts;
      for (size_t n = 1; n <= series->variants.size(); ++n) {
        const size_t i = series->order[n - 1];
        const Sentence& reference =
            cfg.compare_mode == CompareMode::kVsOriginal || n == 1
                ? pair.original
                : series->variants[n - 2];
        texts.push_back(WindowText(reference, i, cfg.window));
        texts.push_back(WindowText(series->variants[n - 1], i, cfg.window));
      }
      try {
        const auto emb = encoder.Encode(texts);
        if (emb.size() != texts.size()) {
          Fail(ErrorCode::kAdapter, "encoder returned " + std::to_string(emb.size()) +
                                        " embeddings for " +
                                        std::to_string(texts.size()) + " texts");
        }
        for (size_t n = 1; n <= series->variants.size(); ++n) {
          out.scores[t][n - 1].push_back(
              Cosine(std::span<const double>(emb[2 * n - 2]),
                     std::span<const double>(emb[2 * n - 1])));
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kAdapter &&
            e.code() != ErrorCode::kDegenerateVector &&
            e.code() != ErrorCode::kInvalidArgument) {
          throw;
        }
        out.error = e.what();
        return out;
      }
    }
    return out;
  });

  CurveReport report;
  report.curves.resize(nt);
  for (size_t t = 0; t < nt; ++t) {
    report.curves[t].type = cfg.types[t];
    report.curves[t].scores.assign(cfg.n_max, {});
  }
  for (const auto& pc : per_pair) {
    if (pc.error) {
      report.partial = true;
      report.error = *pc.error;
      break;
    }
    ++report.pairs_used;
    for (size_t t = 0; t < nt; ++t) {
      auto& curve = report.curves[t];
      curve.series += pc.series[t];
      curve.empty_series += pc.empty[t];
      for (size_t n = 0; n < cfg.n_max; ++n) {
        curve.scores[n].insert(curve.scores[n].end(), pc.scores[t][n].begin(),
                               pc.scores[t][n].end());
      }
    }
  }
  for (auto& curve : report.curves) {
    while (!curve.scores.empty() && curve.scores.back().empty()) {
      curve.scores.pop_back();
    }
    for (size_t n = 1; n <= curve.scores.size(); ++n) {
      curve.points.push_back(Summarize(n, curve.scores[n - 1]));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Verb inflection stress test

VerbConversion ConvertVerbInflections(const Sentence& sentence,
                                      const Morphology& morphology) {
  VerbConversion out{sentence, 0, {}};
  for (size_t i = 0; i < sentence.size(); ++i) {
    const Token& tok = sentence[i];
    if (!IsVerb(tok.pos)) continue;
    const std::string lemma = tok.lemma.empty() || tok.lemma == tok.lower
                                  ? morphology.Lemmatize(tok.lower, CoarsePos::kVerb)
                                  : tok.lemma;
    std::optional<std::string> target;
    switch (tok.pos) {
      case Pos::kVBZ: target = lemma; break;
      case Pos::kVBD:
        target = morphology.Inflect(lemma, CoarsePos::kVerb, FormTag::kVBG);
        break;
      default:
        target = morphology.Inflect(lemma, CoarsePos::kVerb, FormTag::kVBZ);
        break;
    }
    if (!target || target->empty() || *target == tok.lower) continue;
    out.perturbed = out.perturbed.WithReplacement(i, MatchCase(tok.surface, *target));
    ++out.converted;
    out.positions.push_back(i);
  }
  return out;
}

GrammarStressReport GrammarStress(const std::vector<Sentence>& sentences,
                                  const Morphology& morphology,
                                  const GrammarChecker& checker, int jobs) {
  auto per = ParallelMap<std::optional<StressRecord>>(
      sentences.size(), jobs, [&](size_t k) -> std::optional<StressRecord> {
        const Sentence& s = sentences[k];
        if (!checker.Check(s.Text()).empty()) return std::nullopt;
        VerbConversion vc = ConvertVerbInflections(s, morphology);
        StressRecord r;
        r.index = k;
        r.original = s.Text();
        r.perturbed = vc.perturbed.Text();
        r.converted = vc.converted;
        r.detected = vc.converted == 0 ? 0 : checker.Check(r.perturbed).size();
        return r;
      });

  GrammarStressReport report;
  report.input_sentences = sentences.size();
  for (auto& r : per) {
    if (!r) {
      ++report.skipped_with_errors;
      continue;
    }
    ++report.used_sentences;
    report.total_converted += r->converted;
    report.total_detected += r->detected;
    report.records.push_back(std::move(*r));
  }
  if (report.used_sentences > 0) {
    report.avg_perturbed_verbs =
        static_cast<double>(report.total_converted) / report.used_sentences;
    report.avg_detected_errors =
        static_cast<double>(report.total_detected) / report.used_sentences;
  }
  if (report.total_converted > 0) {
    report.detection_ratio =
        static_cast<double>(report.total_detected) / report.total_converted;
  }
  return report;
}

}  // namespace ssaudit
