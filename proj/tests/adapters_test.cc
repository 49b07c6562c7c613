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

#include <atomic>
#include <cmath>
#include <thread>

#include "gtest/gtest.h"
#include "httplib.h"
#include "test_util.h"

namespace ssaudit {
namespace {

using nlohmann::json;

TEST(CodecTest, MlmRoundTrip) {
  MlmQuery q{{"I", "like", "it"}, 1, false, 5};
  json req = MlmRequestJson(q);
  EXPECT_EQ(req["target"], 1);
  EXPECT_EQ(req["masked"], false);
  EXPECT_EQ(req["top_k"], 5);
  EXPECT_EQ(req["tokens"].size(), 3u);
  auto preds = ParseMlmResponse(json::parse(
      R"({"candidates":[{"token":"love","score":0.5},{"token":"##s","is_subword":true}]})"));
  ASSERT_EQ(preds.size(), 2u);
  EXPECT_EQ(preds[0].token, "love");
  EXPECT_DOUBLE_EQ(preds[0].score, 0.5);
  EXPECT_TRUE(preds[1].is_subword);
}

TEST(CodecTest, MalformedResponsesAreAdapterErrors) {
  EXPECT_ERROR_CODE(ParseMlmResponse(json::parse(R"({"x":1})")),
                    ErrorCode::kAdapter);
  EXPECT_ERROR_CODE(ParseMlmResponse(json::parse(R"({"candidates":[{"score":1}]})")),
                    ErrorCode::kAdapter);
  EXPECT_ERROR_CODE(ParseEncoderResponse(json::parse(R"({"embeddings":[[1,2]]})"), 2),
                    ErrorCode::kAdapter);
  EXPECT_ERROR_CODE(ParseEncoderResponse(json::parse(R"({"embeddings":[["a"]]})"), 1),
                    ErrorCode::kAdapter);
  EXPECT_ERROR_CODE(ParseGrammarResponse(json::parse(R"({"errors":{}})")),
                    ErrorCode::kAdapter);
  EXPECT_ERROR_CODE(ParseVictimResponse(json::parse(R"({"label":2,"probs":[0.5,0.5]})")),
                    ErrorCode::kAdapter);
  EXPECT_ERROR_CODE(ParseVictimResponse(json::parse(R"({"label":"a","probs":[1]})")),
                    ErrorCode::kAdapter);
}

TEST(CodecTest, GrammarAndVictim) {
  auto errs = ParseGrammarResponse(
      json::parse(R"({"errors":[{"offset":3,"length":2,"rule":"AGR"}]})"));
  ASSERT_EQ(errs.size(), 1u);
  EXPECT_EQ(errs[0].offset, 3);
  EXPECT_EQ(errs[0].rule, "AGR");
  auto v = ParseVictimResponse(json::parse(R"({"label":1,"probs":[0.2,0.8]})"));
  EXPECT_EQ(v.label, 1);
  EXPECT_DOUBLE_EQ(v.probs[1], 0.8);
  EXPECT_EQ(GrammarRequestJson("x")["text"], "x");
  EXPECT_EQ(VictimRequestJson("y")["text"], "y");
  EXPECT_EQ(EncoderRequestJson({"a", "b"})["texts"].size(), 2u);
}

TEST(HttpJsonEndpointTest, RejectsUnsupportedUrls) {
  EXPECT_ERROR_CODE(HttpJsonEndpoint("https://x/y"), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(HttpJsonEndpoint("http://:80/"), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(HttpJsonEndpoint("http://h:abc/"), ErrorCode::kInvalidArgument);
}

class LocalServer {
 public:
  LocalServer() {
    server_.Post("/mlm", [](const httplib::Request& req, httplib::Response& res) {
      json body = json::parse(req.body);
      json out = {{"candidates", json::array()}};
      out["candidates"].push_back(
          {{"token", body["tokens"][body["target"].get<size_t>()]}, {"score", 1.0}});
      res.set_content(out.dump(), "application/json");
    });
    server_.Post("/encode", [](const httplib::Request& req, httplib::Response& res) {
      json body = json::parse(req.body);
      json out = {{"embeddings", json::array()}};
      for (const auto& t : body["texts"]) {
        out["embeddings"].push_back({static_cast<double>(t.get<std::string>().size()), 1.0});
      }
      res.set_content(out.dump(), "application/json");
    });
    server_.Post("/grammar", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(R"({"errors":[{"offset":0,"length":1,"rule":"R"}]})",
                      "application/json");
    });
    server_.Post("/victim", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(R"({"label":0,"probs":[0.7,0.3]})", "application/json");
    });
    server_.Post("/broken", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("not json", "text/plain");
    });
    server_.Post("/fail", [](const httplib::Request&, httplib::Response& res) {
      res.status = 500;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }
  std::string Url(const std::string& path) const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST(HttpAdaptersTest, RoundTripThroughLocalServer) {
  LocalServer server;
  auto mlm = MakeMlmAdapter(server.Url("/mlm"));
  auto preds = mlm->Predict({{"a", "b"}, 1, true, 3});
  ASSERT_EQ(preds.size(), 1u);
  EXPECT_EQ(preds[0].token, "b");

  auto enc = MakeSentenceEncoder(server.Url("/encode"));
  auto vecs = enc->Encode({"ab", "abcd"});
  ASSERT_EQ(vecs.size(), 2u);
  EXPECT_DOUBLE_EQ(vecs[1][0], 4.0);

  EXPECT_EQ(MakeGrammarChecker(server.Url("/grammar"))->Check("x").size(), 1u);
  EXPECT_EQ(MakeVictim(server.Url("/victim"))->Classify("x").label, 0);
}

TEST(HttpAdaptersTest, FailuresAreAdapterErrors) {
  LocalServer server;
  EXPECT_ERROR_CODE(MakeVictim(server.Url("/broken"))->Classify("x"),
                    ErrorCode::kAdapter);
  EXPECT_ERROR_CODE(MakeVictim(server.Url("/fail"))->Classify("x"),
                    ErrorCode::kAdapter);
  EXPECT_ERROR_CODE(MakeGrammarChecker(server.Url("/victim"))->Check("x"),
                    ErrorCode::kAdapter);
}

TEST(HttpAdaptersTest, UnreachableHostIsAdapterError) {
  auto v = MakeVictim("http://127.0.0.1:1/v");
  EXPECT_ERROR_CODE(v->Classify("x"), ErrorCode::kAdapter);
}

TEST(TableMlmAdapterTest, LooksUpByModeThenWord) {
  TableMlmAdapter t(json::parse(R"({
    "on|unmasked": [{"token": "around"}, {"token": "here"}],
    "On": [{"token": "upon"}, {"token": "at"}, {"token": "in"}]
  })"));
  EXPECT_EQ(t.Predict({{"On", "it"}, 0, false, 30})[0].token, "around");
  auto masked = t.Predict({{"On", "it"}, 0, true, 2});
  ASSERT_EQ(masked.size(), 2u);
  EXPECT_EQ(masked[0].token, "upon");
  EXPECT_TRUE(t.Predict({{"x"}, 0, true, 5}).empty());
  EXPECT_ERROR_CODE(t.Predict({{"x"}, 1, true, 5}), ErrorCode::kAdapter);
}

TEST(TableMlmAdapterTest, LoadsFixture) {
  auto t = MakeMlmAdapter("mock://table:" + testing::FixturePath("mlm_table.json"));
  EXPECT_FALSE(t->Predict({{"On", "the", "move"}, 0, false, 30}).empty());
}

TEST(HashingBowEncoderTest, DeterministicAndWordSensitive) {
  HashingBowEncoder enc(16);
  auto v = enc.Encode({"the cat sat", "The cat sat", "the dog sat", ""});
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], v[1]);
  EXPECT_NE(v[0], v[2]);
  EXPECT_EQ(v[0].size(), 16u);
  EXPECT_DOUBLE_EQ(v[3][15], 1.0);
  EXPECT_EQ(enc.Encode({"the cat sat"})[0], v[0]);
}

TEST(LinearVictimTest, SoftmaxOverSummedWeights) {
  LinearVictim v(json::parse(
      R"({"labels":2,"bias":[0,0],"weights":{"good":[0,2],"bad":[2,0]}})"));
  auto p = v.Classify("a Good movie");
  EXPECT_EQ(p.label, 1);
  EXPECT_NEAR(p.probs[1], 1.0 / (1.0 + std::exp(-2.0)), 1e-12);
  auto tie = v.Classify("good bad");
  EXPECT_EQ(tie.label, 0);
  EXPECT_DOUBLE_EQ(tie.probs[0], 0.5);
  EXPECT_ERROR_CODE(LinearVictim(json::parse(R"({"labels":2,"bias":[0]})")),
                    ErrorCode::kParse);
}

TEST(FactoryTest, MockEndpoints) {
  EXPECT_NE(MakeSentenceEncoder("mock://bow:8"), nullptr);
  EXPECT_EQ(MakeSentenceEncoder("mock://bow:8")->Encode({"x"})[0].size(), 8u);
  EXPECT_TRUE(MakeGrammarChecker("mock://none")->Check("x").empty());
  auto c = MakeVictim("mock://constant:1:3");
  auto p = c->Classify("anything");
  EXPECT_EQ(p.label, 1);
  EXPECT_DOUBLE_EQ(p.probs[1], 0.9);
  EXPECT_ERROR_CODE(MakeVictim("mock://constant:3:3"), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(MakeMlmAdapter("grpc://x"), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(MakeSentenceEncoder("mock://bow:1"), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(MakeVictim("mock://linear:/does/not/exist"), ErrorCode::kIo);
}

}  // namespace
}  // namespace ssaudit
