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

#ifndef SSAUDIT_ADAPTERS_H_
#define SSAUDIT_ADAPTERS_H_

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace ssaudit {

// Model-backed services the audits consume. Every adapter must return the
// same answer for the same request and tolerate concurrent calls.
//
// Endpoints are either "http://host:port/path" (JSON over POST) or one of
// the "mock://" fixtures documented on each factory below.

struct MlmQuery {
  std::vector<std::string> tokens;
  size_t target = 0;
  // true: the target is masked (infilling); false: reconstruction.
  bool masked = true;
  size_t top_k = 30;
};

struct MlmPrediction {
  std::string token;
  double score = 0.0;
  bool is_subword = false;
};

class MlmAdapter {
 public:
  virtual ~MlmAdapter() = default;
  virtual std::vector<MlmPrediction> Predict(const MlmQuery& query) const = 0;
};

class SentenceEncoder {
 public:
  virtual ~SentenceEncoder() = default;
  virtual std::vector<std::vector<double>> Encode(
      const std::vector<std::string>& texts) const = 0;
};

struct GrammarError {
  int offset = 0;
  int length = 0;
  std::string rule;
};

class GrammarChecker {
 public:
  virtual ~GrammarChecker() = default;
  virtual std::vector<GrammarError> Check(const std::string& text) const = 0;
};

struct VictimPrediction {
  int label = 0;
  std::vector<double> probs;
};

class VictimClassifier {
 public:
  virtual ~VictimClassifier() = default;
  virtual VictimPrediction Classify(const std::string& text) const = 0;
};

// Wire codecs. Parsers throw kAdapter on malformed responses.
nlohmann::json MlmRequestJson(const MlmQuery& query);
std::vector<MlmPrediction> ParseMlmResponse(const nlohmann::json& response);
nlohmann::json EncoderRequestJson(const std::vector<std::string>& texts);
std::vector<std::vector<double>> ParseEncoderResponse(
    const nlohmann::json& response, size_t expected);
nlohmann::json GrammarRequestJson(const std::string& text);
std::vector<GrammarError> ParseGrammarResponse(const nlohmann::json& response);
nlohmann::json VictimRequestJson(const std::string& text);
VictimPrediction ParseVictimResponse(const nlohmann::json& response);

// POSTs JSON to one URL. Transport failures, non-200 statuses and
// unparseable bodies throw kAdapter.
class HttpJsonEndpoint {
 public:
  explicit HttpJsonEndpoint(const std::string& url);
  nlohmann::json Post(const nlohmann::json& body) const;
  const std::string& url() const { return url_; }

 private:
  std::string url_;
  std::string host_;
  int port_ = 80;
  std::string path_;
};

// In-process adapters, mostly for tests and fixtures.
class FunctionMlmAdapter : public MlmAdapter {
 public:
  using Fn = std::function<std::vector<MlmPrediction>(const MlmQuery&)>;
  explicit FunctionMlmAdapter(Fn fn) : fn_(std::move(fn)) {}
  std::vector<MlmPrediction> Predict(const MlmQuery& q) const override {
    return fn_(q);
  }

 private:
  Fn fn_;
};

// Looks predictions up by the lower-cased target word. Table format:
// {"<word>": [{"token", "score", "is_subword"}], ...}; optional
// "<word>|masked" / "<word>|unmasked" keys take precedence.
class TableMlmAdapter : public MlmAdapter {
 public:
  explicit TableMlmAdapter(const nlohmann::json& table);
  static std::unique_ptr<TableMlmAdapter> LoadFile(const std::string& path);
  std::vector<MlmPrediction> Predict(const MlmQuery& q) const override;

 private:
  std::unordered_map<std::string, std::vector<MlmPrediction>> table_;
};

// Sum of per-token pseudo-random vectors keyed by a stable hash of the
// lower-cased token, plus a constant bias component. Sentences sharing
// most tokens land close together, which is the behaviour the sensitivity
// audits probe.
class HashingBowEncoder : public SentenceEncoder {
 public:
  explicit HashingBowEncoder(size_t dim = 64) : dim_(dim) {}
  std::vector<std::vector<double>> Encode(
      const std::vector<std::string>& texts) const override;

 private:
  size_t dim_;
};

class FunctionGrammarChecker : public GrammarChecker {
 public:
  using Fn = std::function<std::vector<GrammarError>(const std::string&)>;
  explicit FunctionGrammarChecker(Fn fn) : fn_(std::move(fn)) {}
  std::vector<GrammarError> Check(const std::string& text) const override {
    return fn_(text);
  }

 private:
  Fn fn_;
};

class FunctionVictim : public VictimClassifier {
 public:
  using Fn = std::function<VictimPrediction(const std::string&)>;
  explicit FunctionVictim(Fn fn) : fn_(std::move(fn)) {}
  VictimPrediction Classify(const std::string& text) const override {
    return fn_(text);
  }

 private:
  Fn fn_;
};

// Softmax over bias + summed per-token weight rows. Table format:
// {"labels": n, "bias": [n floats], "weights": {"<word>": [n floats]}}.
class LinearVictim : public VictimClassifier {
 public:
  explicit LinearVictim(const nlohmann::json& model);
  static std::unique_ptr<LinearVictim> LoadFile(const std::string& path);
  VictimPrediction Classify(const std::string& text) const override;

 private:
  size_t labels_ = 2;
  std::vector<double> bias_;
  std::unordered_map<std::string, std::vector<double>> weights_;
};

// Endpoint factories. Supported mocks:
//   MLM:      mock://table:<path>
//   encoder:  mock://bow or mock://bow:<dim>
//   grammar:  mock://none (never reports an error)
//   victim:   mock://constant:<label>:<num_labels>, mock://linear:<path>
std::unique_ptr<MlmAdapter> MakeMlmAdapter(const std::string& endpoint);
std::unique_ptr<SentenceEncoder> MakeSentenceEncoder(const std::string& endpoint);
std::unique_ptr<GrammarChecker> MakeGrammarChecker(const std::string& endpoint);
std::unique_ptr<VictimClassifier> MakeVictim(const std::string& endpoint);

}  // namespace ssaudit

#endif  // SSAUDIT_ADAPTERS_H_
