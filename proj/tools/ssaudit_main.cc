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

// Command-line front end: loads resources and adapters, runs one audit or
// attack, and writes a manifest followed by CSV, Markdown and JSON reports.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssaudit/adapters.h"
#include "ssaudit/attack.h"
#include "ssaudit/audit.h"
#include "ssaudit/constraints.h"
#include "ssaudit/corpus.h"
#include "ssaudit/embeddings.h"
#include "ssaudit/error.h"
#include "ssaudit/lexsem.h"
#include "ssaudit/parallel.h"
#include "ssaudit/report.h"
#include "ssaudit/text_util.h"
#include "ssaudit/transforms.h"

namespace ssaudit {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitAdapter = 3;

struct Options {
  std::string pairs;
  std::string sentences;
  std::string inventory;
  std::string inflections;
  std::string vectors;
  std::string freq_table;
  std::string out_dir = ".";
  std::string transform = "embedding_knn";
  std::optional<size_t> k;
  std::optional<size_t> window;
  bool no_window = false;
  std::string compare_mode;
  std::optional<double> threshold_word;
  std::optional<double> threshold_sent;
  std::string preset = "textfooler";
  uint64_t seed = 0;
  std::string mlm;
  std::string encoder;
  std::string grammar;
  std::string victim;
  int jobs = 1;
  std::string types;
  size_t n_max = 10;
  size_t random_per_position = 10;
  size_t max_candidates = 0;
  std::string high_band = "50:550";
  std::string low_band = "10000:10500";
};

FrequencyBand ParseBand(const std::string& text) {
  const size_t colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    FrequencyBand band{std::stoul(text.substr(0, colon)),
                       std::stoul(text.substr(colon + 1))};
    if (band.lo == 0 || band.hi <= band.lo) throw std::invalid_argument(text);
    return band;
  } catch (const std::logic_error&) {
    Fail(ErrorCode::kInvalidArgument,
         "band must be LO:HI with 1 <= LO < HI, got '" + text + "'");
  }
}

CompareMode CompareModeFlag(const std::string& text, CompareMode fallback) {
  if (text.empty()) return fallback;
  auto mode = ParseCompareMode(text);
  if (!mode) Fail(ErrorCode::kInvalidArgument, "unknown compare mode '" + text + "'");
  return *mode;
}

class Run {
 public:
  Run(std::string command, const Options& opt) : opt_(opt) {
    manifest_.command = std::move(command);
    manifest_.started_at = UtcTimestamp();
    std::error_code ec;
    std::filesystem::create_directories(opt_.out_dir, ec);
    if (ec) Fail(ErrorCode::kIo, "cannot create " + opt_.out_dir);
  }

  RunManifest& manifest() { return manifest_; }

  const Lexicon& LoadLexicon() {
    if (opt_.inventory.empty()) Fail(ErrorCode::kInvalidArgument, "--inventory is required");
    std::optional<std::string> infl;
    if (!opt_.inflections.empty()) infl = opt_.inflections;
    lexicon_ = Lexicon::Load(opt_.inventory, infl);
    manifest_.resources.emplace_back("inventory", opt_.inventory);
    if (infl) manifest_.resources.emplace_back("inflections", *infl);
    return *lexicon_;
  }

  std::vector<AdversarialPair> LoadPairsFile() {
    if (opt_.pairs.empty()) Fail(ErrorCode::kInvalidArgument, "--pairs is required");
    PairLoadResult loaded = ssaudit::LoadPairs(opt_.pairs, &lexicon_->tagger());
    for (const auto& s : loaded.skipped) {
      std::cerr << "warning: " << opt_.pairs << ":" << s.line << ": skipped ("
                << s.reason << ")\n";
    }
    manifest_.resources.emplace_back("pairs", opt_.pairs);
    manifest_.config["pairs_loaded"] = loaded.pairs.size();
    manifest_.config["pairs_skipped"] = loaded.skipped.size();
    return std::move(loaded.pairs);
  }

  const VectorStore& LoadVectors() {
    if (opt_.vectors.empty()) Fail(ErrorCode::kInvalidArgument, "--vectors is required");
    vectors_ = std::make_unique<VectorStore>(VectorStore::LoadText(opt_.vectors));
    manifest_.resources.emplace_back("vectors", opt_.vectors);
    return *vectors_;
  }

  const FrequencyTable* LoadFrequencies(bool required) {
    if (opt_.freq_table.empty()) {
      if (required) Fail(ErrorCode::kInvalidArgument, "--freq-table is required for random types");
      return nullptr;
    }
    freq_ = std::make_unique<FrequencyTable>(FrequencyTable::LoadTsv(opt_.freq_table));
    manifest_.resources.emplace_back("freq_table", opt_.freq_table);
    return freq_.get();
  }

  void Adapter(const std::string& name, const std::string& endpoint) {
    manifest_.adapters.emplace_back(name, endpoint);
  }

  std::string Path(const std::string& file) const {
    return (std::filesystem::path(opt_.out_dir) / file).string();
  }

  // Records the output list and writes manifest.json.
  void WriteManifest(const std::vector<std::string>& files) {
    for (const auto& f : files) manifest_.outputs.push_back(Path(f));
    WriteTextFile(Path("manifest.json"), manifest_.ToJson().dump(2) + "\n");
  }

 private:
  const Options& opt_;
  RunManifest manifest_;
  std::unique_ptr<Lexicon> lexicon_;
  std::unique_ptr<VectorStore> vectors_;
  std::unique_ptr<FrequencyTable> freq_;
};

void WriteJson(const std::string& path, const nlohmann::ordered_json& j) {
  WriteTextFile(path, j.dump(2) + "\n");
}

int AuditPairsCommand(const Options& opt) {
  Run run("audit-pairs", opt);
  const Lexicon& lex = run.LoadLexicon();
  auto pairs = run.LoadPairsFile();
  run.manifest().config["jobs"] = opt.jobs;
  run.WriteManifest({"audit_pairs.csv", "audit_pairs_swaps.csv",
                     "audit_pairs.md", "audit_pairs.json"});
  TaxonomyReport report = AuditPairs(pairs, lex, opt.jobs);
  WriteTextFile(run.Path("audit_pairs.csv"), TaxonomyCsv(report));
  WriteTextFile(run.Path("audit_pairs_swaps.csv"), TaxonomySwapsCsv(report));
  WriteTextFile(run.Path("audit_pairs.md"), TaxonomyMarkdown(report));
  WriteJson(run.Path("audit_pairs.json"), TaxonomyJson(report));
  std::cout << TaxonomyMarkdown(report);
  return kExitOk;
}

int CandidateStatsCommand(const Options& opt) {
  Run run("candidate-stats", opt);
  const Lexicon& lex = run.LoadLexicon();
  auto pairs = run.LoadPairsFile();
  auto source = ParseTransformSource(opt.transform);
  if (!source) Fail(ErrorCode::kInvalidArgument, "unknown transform '" + opt.transform + "'");
  TransformSpec spec{*source, opt.k.value_or(kDefaultCandidateCount)};
  if (spec.k == 0u) Fail(ErrorCode::kInvalidArgument, "--k must be at least 1");
  TransformResources res;
  res.lexicon = &lex;
  std::unique_ptr<MlmAdapter> mlm;
  if (*source == TransformSource::kEmbeddingKnn) res.vectors = &run.LoadVectors();
  if (*source == TransformSource::kMlmInfill ||
      *source == TransformSource::kMlmReconstruct) {
    if (opt.mlm.empty()) Fail(ErrorCode::kInvalidArgument, "--mlm is required for MLM transforms");
    mlm = MakeMlmAdapter(opt.mlm);
    res.mlm = mlm.get();
    run.Adapter("mlm", opt.mlm);
  }
  Transform transform = MakeTransform(spec, res);
  run.manifest().config["transform"] = opt.transform;
  run.manifest().config["k"] = *spec.k;
  run.manifest().config["jobs"] = opt.jobs;
  run.WriteManifest({"candidate_stats.csv", "candidate_stats.md",
                     "candidate_stats.json"});
  CompositionReport report = CandidateComposition(pairs, transform, lex, opt.jobs);
  for (const auto& s : report.skipped) {
    std::cerr << "warning: pair " << s.pair_index << " position " << s.position
              << " skipped: " << s.reason << "\n";
  }
  WriteTextFile(run.Path("candidate_stats.csv"), CompositionCsv(report));
  WriteTextFile(run.Path("candidate_stats.md"),
                CompositionMarkdown(report, opt.transform));
  WriteJson(run.Path("candidate_stats.json"), CompositionJson(report));
  std::cout << CompositionMarkdown(report, opt.transform);
  return kExitOk;
}

bool NeedsFrequencies(const std::vector<SwapSource>& types) {
  for (SwapSource t : types) {
    if (IsRandomSource(t)) return true;
  }
  return false;
}

int DetectorCommand(const Options& opt) {
  Run run("detector-aupr", opt);
  const Lexicon& lex = run.LoadLexicon();
  auto pairs = run.LoadPairsFile();
  const VectorStore& store = run.LoadVectors();
  DetectorConfig cfg;
  if (!opt.types.empty()) cfg.types = ParseSwapSourceList(opt.types);
  cfg.random_per_position = opt.random_per_position;
  cfg.high_band = ParseBand(opt.high_band);
  cfg.low_band = ParseBand(opt.low_band);
  cfg.seed = opt.seed;
  const FrequencyTable* freq = run.LoadFrequencies(NeedsFrequencies(cfg.types));
  nlohmann::ordered_json types = nlohmann::ordered_json::array();
  for (SwapSource t : cfg.types) types.push_back(SwapSourceName(t));
  run.manifest().config["types"] = types;
  run.manifest().config["random_per_position"] = cfg.random_per_position;
  run.manifest().config["high_band"] = opt.high_band;
  run.manifest().config["low_band"] = opt.low_band;
  run.manifest().config["jobs"] = opt.jobs;
  run.manifest().seed = opt.seed;
  run.WriteManifest({"detector_aupr.csv", "detector_aupr.md", "detector_aupr.json"});
  DetectorReport report = DetectorEval(pairs, lex, store, freq, cfg, opt.jobs);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  WriteTextFile(run.Path("detector_aupr.csv"), DetectorCsv(report));
  WriteTextFile(run.Path("detector_aupr.md"), DetectorMarkdown(report));
  WriteJson(run.Path("detector_aupr.json"), DetectorJson(report));
  std::cout << DetectorMarkdown(report);
  return kExitOk;
}

int EncoderCurveCommand(const Options& opt) {
  Run run("encoder-curve", opt);
  const Lexicon& lex = run.LoadLexicon();
  auto pairs = run.LoadPairsFile();
  CurveConfig cfg;
  if (!opt.types.empty()) cfg.types = ParseSwapSourceList(opt.types);
  cfg.n_max = opt.n_max;
  cfg.window = opt.no_window ? std::nullopt : std::optional<size_t>(opt.window.value_or(7));
  cfg.compare_mode = CompareModeFlag(opt.compare_mode, CompareMode::kVsOriginal);
  cfg.seed = opt.seed;
  SeriesResources res;
  res.lexicon = &lex;
  res.frequencies = run.LoadFrequencies(NeedsFrequencies(cfg.types));
  res.high_band = ParseBand(opt.high_band);
  res.low_band = ParseBand(opt.low_band);
  if (opt.encoder.empty()) Fail(ErrorCode::kInvalidArgument, "--encoder is required");
  auto encoder = MakeSentenceEncoder(opt.encoder);
  run.Adapter("encoder", opt.encoder);
  nlohmann::ordered_json types = nlohmann::ordered_json::array();
  for (SwapSource t : cfg.types) types.push_back(SwapSourceName(t));
  run.manifest().config["types"] = types;
  run.manifest().config["n_max"] = cfg.n_max;
  run.manifest().config["window"] =
      cfg.window ? nlohmann::ordered_json(*cfg.window) : nlohmann::ordered_json(nullptr);
  run.manifest().config["compare_mode"] = CompareModeName(cfg.compare_mode);
  run.manifest().config["high_band"] = opt.high_band;
  run.manifest().config["low_band"] = opt.low_band;
  run.manifest().config["jobs"] = opt.jobs;
  run.manifest().seed = opt.seed;
  run.WriteManifest({"encoder_curve.csv", "encoder_curve.md", "encoder_curve.json"});
  CurveReport report = EncoderSensitivityCurve(pairs, *encoder, res, cfg, opt.jobs);
  WriteTextFile(run.Path("encoder_curve.csv"), CurveCsv(report));
  WriteTextFile(run.Path("encoder_curve.md"), CurveMarkdown(report));
  WriteJson(run.Path("encoder_curve.json"), CurveJson(report));
  std::cout << CurveMarkdown(report);
  if (report.partial) {
    std::cerr << "error: encoder failed; partial results written: " << report.error
              << "\n";
    return kExitAdapter;
  }
  return kExitOk;
}

std::vector<Sentence> LoadSentences(const std::string& path, const Lexicon& lex) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  std::vector<Sentence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    out.push_back(lex.Tokenize(line));
  }
  return out;
}

int GrammarStressCommand(const Options& opt) {
  Run run("grammar-stress", opt);
  const Lexicon& lex = run.LoadLexicon();
  std::vector<Sentence> sentences;
  if (!opt.sentences.empty()) {
    sentences = LoadSentences(opt.sentences, lex);
    run.manifest().resources.emplace_back("sentences", opt.sentences);
  } else {
    for (auto& p : run.LoadPairsFile()) sentences.push_back(std::move(p.original));
  }
  if (opt.grammar.empty()) Fail(ErrorCode::kInvalidArgument, "--grammar is required");
  auto checker = MakeGrammarChecker(opt.grammar);
  run.Adapter("grammar", opt.grammar);
  run.manifest().config["jobs"] = opt.jobs;
  run.WriteManifest({"grammar_stress.csv", "grammar_stress.md", "grammar_stress.json"});
  GrammarStressReport report =
      GrammarStress(sentences, lex.morphology(), *checker, opt.jobs);
  WriteTextFile(run.Path("grammar_stress.csv"), GrammarStressCsv(report));
  WriteTextFile(run.Path("grammar_stress.md"), GrammarStressMarkdown(report));
  WriteJson(run.Path("grammar_stress.json"), GrammarStressJson(report));
  std::cout << GrammarStressMarkdown(report);
  return kExitOk;
}

int AttackCommand(const Options& opt) {
  Run run("attack", opt);
  const Lexicon& lex = run.LoadLexicon();
  auto pairs = run.LoadPairsFile();
  AttackConfig cfg = Preset(opt.preset);
  if (opt.k) cfg.transformation.k = *opt.k;
  if (opt.no_window) cfg.constraints.window.reset();
  if (opt.window) cfg.constraints.window = *opt.window;
  if (opt.threshold_word) cfg.constraints.word_sim_threshold = *opt.threshold_word;
  if (opt.threshold_sent) cfg.constraints.sent_sim_threshold = *opt.threshold_sent;
  cfg.constraints.compare_mode =
      CompareModeFlag(opt.compare_mode, cfg.constraints.compare_mode);
  cfg.max_candidates_per_word = opt.max_candidates;
  cfg.Validate();

  TransformResources tres;
  tres.lexicon = &lex;
  ConstraintResources cres;
  cres.tagger = &lex.tagger();
  const bool knn = cfg.transformation.source == TransformSource::kEmbeddingKnn;
  if (knn || cfg.constraints.word_sim_threshold) {
    const VectorStore& store = run.LoadVectors();
    tres.vectors = &store;
    cres.vectors = &store;
  }
  std::unique_ptr<MlmAdapter> mlm;
  if (cfg.transformation.source == TransformSource::kMlmInfill ||
      cfg.transformation.source == TransformSource::kMlmReconstruct) {
    if (opt.mlm.empty()) Fail(ErrorCode::kInvalidArgument, "--mlm is required for this preset");
    mlm = MakeMlmAdapter(opt.mlm);
    tres.mlm = mlm.get();
    run.Adapter("mlm", opt.mlm);
  }
  std::unique_ptr<SentenceEncoder> encoder;
  if (cfg.constraints.sent_sim_threshold) {
    if (opt.encoder.empty()) Fail(ErrorCode::kInvalidArgument, "--encoder is required for this preset");
    encoder = MakeSentenceEncoder(opt.encoder);
    cres.encoder = encoder.get();
    run.Adapter("encoder", opt.encoder);
  }
  std::unique_ptr<GrammarChecker> checker;
  if (cfg.constraints.grammar_mode == GrammarMode::kNoNewErrors) {
    if (opt.grammar.empty()) Fail(ErrorCode::kInvalidArgument, "--grammar is required for this preset");
    checker = MakeGrammarChecker(opt.grammar);
    cres.grammar = checker.get();
    run.Adapter("grammar", opt.grammar);
  }
  if (opt.victim.empty()) Fail(ErrorCode::kInvalidArgument, "--victim is required");
  auto victim = MakeVictim(opt.victim);
  run.Adapter("victim", opt.victim);
  Transform transform = MakeTransform(cfg.transformation, tres);

  auto& c = run.manifest().config;
  c["preset"] = opt.preset;
  c["transform"] = TransformSourceName(cfg.transformation.source);
  c["k"] = cfg.transformation.k ? nlohmann::ordered_json(*cfg.transformation.k)
                                : nlohmann::ordered_json(nullptr);
  auto opt_real = [](const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  c["threshold_word"] = opt_real(cfg.constraints.word_sim_threshold);
  c["threshold_sent"] = opt_real(cfg.constraints.sent_sim_threshold);
  c["window"] = cfg.constraints.window
                    ? nlohmann::ordered_json(*cfg.constraints.window)
                    : nlohmann::ordered_json(nullptr);
  c["compare_mode"] = CompareModeName(cfg.constraints.compare_mode);
  c["pos_mode"] = PosModeName(cfg.constraints.pos_mode);
  c["grammar_mode"] = GrammarModeName(cfg.constraints.grammar_mode);
  c["max_candidates_per_word"] = cfg.max_candidates_per_word;
  c["jobs"] = opt.jobs;
  run.WriteManifest({"attack.csv", "attack.md", "attack_results.jsonl"});

  auto results = ParallelMap<AttackResult>(pairs.size(), opt.jobs, [&](size_t i) {
    return RunAttack(pairs[i].original, cfg, *victim, transform, cres,
                     pairs[i].label);
  });
  std::string jsonl;
  for (size_t i = 0; i < results.size(); ++i) {
    jsonl += AttackResultJson(pairs[i].original, results[i]).dump() + "\n";
  }
  const AttackSummary summary = SummarizeAttacks(results);
  WriteTextFile(run.Path("attack.csv"), AttackCsv(summary));
  WriteTextFile(run.Path("attack.md"), AttackMarkdown(summary, opt.preset));
  WriteTextFile(run.Path("attack_results.jsonl"), jsonl);
  std::cout << AttackMarkdown(summary, opt.preset);
  return kExitOk;
}

void AddResourceFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--pairs", o.pairs, "Adversarial pairs (JSONL)");
  cmd->add_option("--inventory", o.inventory, "Sense inventory (JSON)")->required();
  cmd->add_option("--inflections", o.inflections, "Inflection table (JSON)");
  cmd->add_option("--out-dir", o.out_dir, "Directory for the manifest and reports");
  cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
}

void AddSeriesFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--types", o.types, "Comma-separated substitution types");
  cmd->add_option("--freq-table", o.freq_table, "Word frequency TSV");
  cmd->add_option("--high-band", o.high_band, "High-frequency ranks LO:HI");
  cmd->add_option("--low-band", o.low_band, "Low-frequency ranks LO:HI");
  cmd->add_option("--seed", o.seed, "Random seed");
}

int Main(int argc, char** argv) {
  CLI::App app{"Synonym-substitution attack generation and validity audits"};
  app.require_subcommand(1);
  Options o;

  auto* audit = app.add_subcommand("audit-pairs", "Classify every perturbed word");
  AddResourceFlags(audit, o);

  auto* stats = app.add_subcommand("candidate-stats", "Candidate-set composition");
  AddResourceFlags(stats, o);
  stats->add_option("--transform", o.transform,
                    "wordnet | embedding_knn | mlm_infill | mlm_reconstruct");
  stats->add_option("--k", o.k, "Candidates per position");
  stats->add_option("--vectors", o.vectors, "Word vectors (GloVe text format)");
  stats->add_option("--mlm", o.mlm, "Masked-LM endpoint");

  auto* det = app.add_subcommand("detector-aupr", "Word-embedding detector AUPR");
  AddResourceFlags(det, o);
  AddSeriesFlags(det, o);
  det->add_option("--vectors", o.vectors, "Word vectors (GloVe text format)");
  det->add_option("--k,--random-per-position", o.random_per_position,
                  "Band words sampled per position for random types");

  auto* curve = app.add_subcommand("encoder-curve", "Sentence-encoder sensitivity");
  AddResourceFlags(curve, o);
  AddSeriesFlags(curve, o);
  curve->add_option("--encoder", o.encoder, "Sentence-encoder endpoint");
  curve->add_option("--n-max", o.n_max, "Largest swap count");
  curve->add_option("--window", o.window, "Window half-width (default 7)");
  curve->add_flag("--no-window", o.no_window, "Compare whole sentences");
  curve->add_option("--compare-mode", o.compare_mode, "vs_original | vs_previous");

  auto* gram = app.add_subcommand("grammar-stress", "Verb-inflection stress test");
  AddResourceFlags(gram, o);
  gram->add_option("--sentences", o.sentences, "Plain-text sentences, one per line");
  gram->add_option("--grammar,--checker", o.grammar, "Grammar-checker endpoint");

  auto* atk = app.add_subcommand("attack", "Run a preset attack over pair originals");
  AddResourceFlags(atk, o);
  atk->add_option("--preset", o.preset, "pwws | textfooler | bert_attack | bae | "
                                        "textfooler_adj | a2t");
  atk->add_option("--vectors", o.vectors, "Word vectors (GloVe text format)");
  atk->add_option("--mlm", o.mlm, "Masked-LM endpoint");
  atk->add_option("--encoder", o.encoder, "Sentence-encoder endpoint");
  atk->add_option("--grammar", o.grammar, "Grammar-checker endpoint");
  atk->add_option("--victim", o.victim, "Victim-classifier endpoint");
  atk->add_option("--k", o.k, "Override the preset's candidate count");
  atk->add_option("--window", o.window, "Override the window half-width");
  atk->add_flag("--no-window", o.no_window, "Compare whole sentences");
  atk->add_option("--compare-mode", o.compare_mode, "vs_original | vs_previous");
  atk->add_option("--threshold-word", o.threshold_word, "Word-embedding threshold");
  atk->add_option("--threshold-sent", o.threshold_sent, "Sentence-similarity threshold");
  atk->add_option("--max-candidates", o.max_candidates,
                  "Candidates tried per position (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitValidation;
  }

  try {
    if (*audit) return AuditPairsCommand(o);
    if (*stats) return CandidateStatsCommand(o);
    if (*det) return DetectorCommand(o);
    if (*curve) return EncoderCurveCommand(o);
    if (*gram) return GrammarStressCommand(o);
    if (*atk) return AttackCommand(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kAdapter || e.code() == ErrorCode::kEmptyPrediction
               ? kExitAdapter
               : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace
}  // namespace ssaudit

int main(int argc, char** argv) { return ssaudit::Main(argc, argv); }
