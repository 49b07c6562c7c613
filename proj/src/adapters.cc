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

#include "ssaudit/adapters.h"

#include <cmath>
#include <fstream>

#include "httplib.h"
#include "ssaudit/error.h"
#include "ssaudit/random.h"
#include "ssaudit/text_util.h"

namespace ssaudit {

namespace {

[[noreturn]] void BadResponse(const std::string& what) {
  Fail(ErrorCode::kAdapter, "malformed response: " + what);
}

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
}

uint64_t Fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::vector<MlmPrediction> PredictionsFromJson(const nlohmann::json& list) {
  if (!list.is_array()) BadResponse("candidates must be a list");
  std::vector<MlmPrediction> out;
  for (const auto& c : list) {
    if (!c.is_object() || !c.contains("token") || !c["token"].is_string()) {
      BadResponse("candidate without a string token");
    }
    MlmPrediction p;
    p.token = c["token"].get<std::string>();
    if (c.contains("score")) {
      if (!c["score"].is_number()) BadResponse("score must be a number");
      p.score = c["score"].get<double>();
    }
    if (c.contains("is_subword")) {
      if (!c["is_subword"].is_boolean()) BadResponse("is_subword must be bool");
      p.is_subword = c["is_subword"].get<bool>();
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

nlohmann::json MlmRequestJson(const MlmQuery& q) {
  return {{"tokens", q.tokens},
          {"target", q.target},
          {"masked", q.masked},
          {"top_k", q.top_k}};
}

std::vector<MlmPrediction> ParseMlmResponse(const nlohmann::json& r) {
  if (!r.is_object() || !r.contains("candidates")) {
    BadResponse("expected {\"candidates\": [...]}");
  }
  return PredictionsFromJson(r["candidates"]);
}

nlohmann::json EncoderRequestJson(const std::vector<std::string>& texts) {
  return {{"texts", texts}};
}

std::vector<std::vector<double>> ParseEncoderResponse(const nlohmann::json& r,
                                                      size_t expected) {
  if (!r.is_object() || !r.contains("embeddings") ||
      !r["embeddings"].is_array()) {
    BadResponse("expected {\"embeddings\": [[...]]}");
  }
  std::vector<std::vector<double>> out;
  for (const auto& row : r["embeddings"]) {
    if (!row.is_array()) BadResponse("embedding rows must be lists");
    std::vector<double> v;
    for (const auto& x : row) {
      if (!x.is_number()) BadResponse("embedding values must be numbers");
      v.push_back(x.get<double>());
    }
    out.push_back(std::move(v));
  }
  if (out.size() != expected) {
    BadResponse("expected " + std::to_string(expected) + " embeddings, got " +
                std::to_string(out.size()));
  }
  return out;
}

nlohmann::json GrammarRequestJson(const std::string& text) {
  return {{"text", text}};
}

std::vector<GrammarError> ParseGrammarResponse(const nlohmann::json& r) {
  if (!r.is_object() || !r.contains("errors") || !r["errors"].is_array()) {
    BadResponse("expected {\"errors\": [...]}");
  }
  std::vector<GrammarError> out;
  for (const auto& e : r["errors"]) {
    if (!e.is_object()) BadResponse("error entries must be objects");
    GrammarError g;
    try {
      g.offset = e.value("offset", 0);
      g.length = e.value("length", 0);
      g.rule = e.value("rule", std::string());
    } catch (const nlohmann::json::exception&) {
      BadResponse("error fields have the wrong type");
    }
    out.push_back(std::move(g));
  }
  return out;
}

nlohmann::json VictimRequestJson(const std::string& text) {
  return {{"text", text}};
}

VictimPrediction ParseVictimResponse(const nlohmann::json& r) {
  if (!r.is_object() || !r.contains("label") ||
      !r["label"].is_number_integer() || !r.contains("probs") ||
      !r["probs"].is_array()) {
    BadResponse("expected {\"label\": int, \"probs\": [...]}");
  }
  VictimPrediction p;
  p.label = r["label"].get<int>();
  for (const auto& x : r["probs"]) {
    if (!x.is_number()) BadResponse("probs must be numbers");
    p.probs.push_back(x.get<double>());
  }
  if (p.label < 0 || static_cast<size_t>(p.label) >= p.probs.size()) {
    BadResponse("label outside probs");
  }
  return p;
}

HttpJsonEndpoint::HttpJsonEndpoint(const std::string& url) : url_(url) {
  constexpr std::string_view kScheme = "http://";
  if (!StartsWith(url, kScheme)) {
    Fail(ErrorCode::kInvalidArgument, "only http:// endpoints are supported: " + url);
  }
  std::string rest = url.substr(kScheme.size());
  auto slash = rest.find('/');
  std::string authority = rest.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : rest.substr(slash);
  auto colon = authority.rfind(':');
  if (colon != std::string::npos) {
    host_ = authority.substr(0, colon);
    try {
      port_ = std::stoi(authority.substr(colon + 1));
    } catch (const std::exception&) {
      Fail(ErrorCode::kInvalidArgument, "bad port in " + url);
    }
  } else {
    host_ = authority;
  }
  if (host_.empty()) Fail(ErrorCode::kInvalidArgument, "missing host in " + url);
}

nlohmann::json HttpJsonEndpoint::Post(const nlohmann::json& body) const {
  httplib::Client client(host_, port_);
  client.set_connection_timeout(10);
  client.set_read_timeout(120);
  auto res = client.Post(path_, body.dump(), "application/json");
  if (!res) {
    Fail(ErrorCode::kAdapter,
         url_ + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    Fail(ErrorCode::kAdapter,
         url_ + ": HTTP status " + std::to_string(res->status));
  }
  try {
    return nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kAdapter, url_ + ": unparseable body: " + e.what());
  }
}

namespace {

class HttpMlm : public MlmAdapter {
 public:
  explicit HttpMlm(const std::string& url) : ep_(url) {}
  std::vector<MlmPrediction> Predict(const MlmQuery& q) const override {
    return ParseMlmResponse(ep_.Post(MlmRequestJson(q)));
  }

 private:
  HttpJsonEndpoint ep_;
};

class HttpEncoder : public SentenceEncoder {
 public:
  explicit HttpEncoder(const std::string& url) : ep_(url) {}
  std::vector<std::vector<double>> Encode(
      const std::vector<std::string>& texts) const override {
    return ParseEncoderResponse(ep_.Post(EncoderRequestJson(texts)),
                                texts.size());
  }

 private:
  HttpJsonEndpoint ep_;
};

class HttpGrammar : public GrammarChecker {
 public:
  explicit HttpGrammar(const std::string& url) : ep_(url) {}
  std::vector<GrammarError> Check(const std::string& text) const override {
    return ParseGrammarResponse(ep_.Post(GrammarRequestJson(text)));
  }

 private:
  HttpJsonEndpoint ep_;
};

class HttpVictim : public VictimClassifier {
 public:
  explicit HttpVictim(const std::string& url) : ep_(url) {}
  VictimPrediction Classify(const std::string& text) const override {
    return ParseVictimResponse(ep_.Post(VictimRequestJson(text)));
  }

 private:
  HttpJsonEndpoint ep_;
};

constexpr std::string_view kMock = "mock://";

[[noreturn]] void UnknownEndpoint(const std::string& kind,
                                  const std::string& endpoint) {
  Fail(ErrorCode::kInvalidArgument,
       "unsupported " + kind + " endpoint: " + endpoint);
}

}  // namespace

TableMlmAdapter::TableMlmAdapter(const nlohmann::json& table) {
  if (!table.is_object()) {
    Fail(ErrorCode::kParse, "MLM table must be a JSON object");
  }
  for (const auto& [key, list] : table.items()) {
    try {
      table_[CaseFold(key)] = PredictionsFromJson(list);
    } catch (const Error& e) {
      Fail(ErrorCode::kParse, "MLM table entry '" + key + "': " + e.what());
    }
  }
}

std::unique_ptr<TableMlmAdapter> TableMlmAdapter::LoadFile(
    const std::string& path) {
  return std::make_unique<TableMlmAdapter>(ReadJsonFile(path));
}

std::vector<MlmPrediction> TableMlmAdapter::Predict(const MlmQuery& q) const {
  if (q.target >= q.tokens.size()) {
    Fail(ErrorCode::kAdapter, "target outside tokens");
  }
  const std::string word = CaseFold(q.tokens[q.target]);
  auto it = table_.find(word + (q.masked ? "|masked" : "|unmasked"));
  if (it == table_.end()) it = table_.find(word);
  if (it == table_.end()) return {};
  std::vector<MlmPrediction> out = it->second;
  if (out.size() > q.top_k) out.resize(q.top_k);
  return out;
}

std::vector<std::vector<double>> HashingBowEncoder::Encode(
    const std::vector<std::string>& texts) const {
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    std::vector<double> v(dim_, 0.0);
    v[dim_ - 1] = 1.0;
    for (const auto& tok : SplitWhitespace(text)) {
      Rng rng(Fnv1a(CaseFold(tok)));
      for (size_t d = 0; d + 1 < dim_; ++d) {
        v[d] += static_cast<double>(rng.Below(1u << 30)) / (1u << 29) - 1.0;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

LinearVictim::LinearVictim(const nlohmann::json& model) {
  try {
    labels_ = model.at("labels").get<size_t>();
    if (labels_ < 1) Fail(ErrorCode::kParse, "victim needs >= 1 label");
    bias_ = model.value("bias", std::vector<double>(labels_, 0.0));
    if (bias_.size() != labels_) Fail(ErrorCode::kParse, "bias size != labels");
    if (model.contains("weights")) {
      for (const auto& [w, row] : model["weights"].items()) {
        auto r = row.get<std::vector<double>>();
        if (r.size() != labels_) {
          Fail(ErrorCode::kParse, "weight row size != labels for " + w);
        }
        weights_[CaseFold(w)] = std::move(r);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, std::string("victim model: ") + e.what());
  }
}

std::unique_ptr<LinearVictim> LinearVictim::LoadFile(const std::string& path) {
  return std::make_unique<LinearVictim>(ReadJsonFile(path));
}

VictimPrediction LinearVictim::Classify(const std::string& text) const {
  std::vector<double> logits = bias_;
  for (const auto& tok : SplitWhitespace(text)) {
    auto it = weights_.find(CaseFold(tok));
    if (it == weights_.end()) continue;
    for (size_t c = 0; c < labels_; ++c) logits[c] += it->second[c];
  }
  double mx = logits[0];
  for (double x : logits) mx = std::max(mx, x);
  double z = 0.0;
  VictimPrediction p;
  for (double x : logits) {
    p.probs.push_back(std::exp(x - mx));
    z += p.probs.back();
  }
  for (double& x : p.probs) x /= z;
  p.label = 0;
  for (size_t c = 1; c < labels_; ++c) {
    if (p.probs[c] > p.probs[p.label]) p.label = static_cast<int>(c);
  }
  return p;
}

std::unique_ptr<MlmAdapter> MakeMlmAdapter(const std::string& endpoint) {
  if (StartsWith(endpoint, "http://")) return std::make_unique<HttpMlm>(endpoint);
  const std::string table = std::string(kMock) + "table:";
  if (StartsWith(endpoint, table)) {
    return TableMlmAdapter::LoadFile(endpoint.substr(table.size()));
  }
  UnknownEndpoint("MLM", endpoint);
}

std::unique_ptr<SentenceEncoder> MakeSentenceEncoder(
    const std::string& endpoint) {
  if (StartsWith(endpoint, "http://")) {
    return std::make_unique<HttpEncoder>(endpoint);
  }
  const std::string bow = std::string(kMock) + "bow";
  if (endpoint == bow) return std::make_unique<HashingBowEncoder>();
  if (StartsWith(endpoint, bow + ":")) {
    size_t dim = 0;
    try {
      dim = std::stoul(endpoint.substr(bow.size() + 1));
    } catch (const std::exception&) {
      UnknownEndpoint("encoder", endpoint);
    }
    if (dim < 2) UnknownEndpoint("encoder", endpoint);
    return std::make_unique<HashingBowEncoder>(dim);
  }
  UnknownEndpoint("encoder", endpoint);
}

std::unique_ptr<GrammarChecker> MakeGrammarChecker(const std::string& endpoint) {
  if (StartsWith(endpoint, "http://")) {
    return std::make_unique<HttpGrammar>(endpoint);
  }
  if (endpoint == std::string(kMock) + "none") {
    return std::make_unique<FunctionGrammarChecker>(
        [](const std::string&) { return std::vector<GrammarError>{}; });
  }
  UnknownEndpoint("grammar", endpoint);
}

std::unique_ptr<VictimClassifier> MakeVictim(const std::string& endpoint) {
  if (StartsWith(endpoint, "http://")) {
    return std::make_unique<HttpVictim>(endpoint);
  }
  const std::string linear = std::string(kMock) + "linear:";
  if (StartsWith(endpoint, linear)) {
    return LinearVictim::LoadFile(endpoint.substr(linear.size()));
  }
  const std::string constant = std::string(kMock) + "constant:";
  if (StartsWith(endpoint, constant)) {
    auto parts = endpoint.substr(constant.size());
    auto colon = parts.find(':');
    if (colon == std::string::npos) UnknownEndpoint("victim", endpoint);
    int label = 0;
    size_t n = 0;
    try {
      label = std::stoi(parts.substr(0, colon));
      n = std::stoul(parts.substr(colon + 1));
    } catch (const std::exception&) {
      UnknownEndpoint("victim", endpoint);
    }
    if (n < 1 || label < 0 || static_cast<size_t>(label) >= n) {
      UnknownEndpoint("victim", endpoint);
    }
    return std::make_unique<FunctionVictim>([label, n](const std::string&) {
      VictimPrediction p;
      p.label = label;
      p.probs.assign(n, n > 1 ? 0.1 / static_cast<double>(n - 1) : 1.0);
      if (n > 1) p.probs[label] = 0.9;
      return p;
    });
  }
  UnknownEndpoint("victim", endpoint);
}

}  // namespace ssaudit
