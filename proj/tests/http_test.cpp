/*
 * Copyright (c) 2026, The rpi-workbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "rpi/http_service.hpp"

namespace rpi {
namespace {

class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ServiceOptions options;
    options.corpus = DefaultCorpus();
    service_ = std::make_unique<HttpService>(store_, options);
    port_ = service_->Bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { service_->Run(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }

  void TearDown() override {
    service_->Stop();
    thread_.join();
  }

  Json Post(const std::string& path, const Json& body, int expect) {
    auto res = client_->Post(path, body.dump(), "application/json");
    EXPECT_TRUE(res) << path;
    if (!res) return {};
    EXPECT_EQ(res->status, expect) << path << ": " << res->body;
    return Json::parse(res->body);
  }

  Json Get(const std::string& path, int expect = 200) {
    auto res = client_->Get(path);
    EXPECT_TRUE(res) << path;
    if (!res) return {};
    EXPECT_EQ(res->status, expect) << path << ": " << res->body;
    return Json::parse(res->body);
  }

  std::string Create(const std::string& source, const std::string& semantics) {
    return Post("/sessions", {{"source", source}, {"semantics", semantics}}, 201)["id"];
  }

  // Takes the first listed transition matching the predicate.
  Json StepWhere(const std::string& id, const std::function<bool(const Json&)>& pred) {
    Json listing = Get("/sessions/" + id + "/transitions");
    for (const Json& t : listing)
      if (pred(t)) return Post("/sessions/" + id + "/step", {{"transition_id", t["id"]}}, 200);
    ADD_FAILURE() << "no matching transition in " << listing.dump();
    return {};
  }

  static std::function<bool(const Json&)> Extrusion(const std::string& subject) {
    return [subject](const Json& t) { return t["action"]["type"] == "bout" && t["action"]["subject"] == subject; };
  }

  SessionStore store_;
  std::unique_ptr<HttpService> service_;
  int port_ = 0;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(HttpTest, CreateAndInspect) {
  Json created = Post("/sessions", {{"source", "b<a>.0 | b(x).x<c>"}, {"semantics", "rpi"}}, 201);
  std::string id = created["id"];
  EXPECT_EQ(created["state"]["text"], "b<a> | b(x).x<c>");
  EXPECT_EQ(Get("/sessions/" + id + "/state")["text"], "b<a> | b(x).x<c>");
  Json listing = Get("/sessions/" + id + "/transitions?dir=fwd");
  ASSERT_EQ(listing.size(), 3u);
  EXPECT_EQ(Get("/sessions/" + id + "/transitions?dir=bwd").size(), 0u);
  Json step = Post("/sessions/" + id + "/step", {{"transition_id", listing[2]["id"]}}, 200);
  EXPECT_EQ(step["state"]["text"], "b<a>[1,*] | b(x)[1,*].a^1<c>");
  EXPECT_EQ(step["transition"]["action"]["type"], "tau");
  EXPECT_EQ(Get("/sessions/" + id + "/transitions?dir=bwd").size(), 1u);
  EXPECT_EQ(Get("/sessions/" + id + "/replay")["ok"], true);
  EXPECT_EQ(Get("/sessions/" + id + "/trace")["steps"].size(), 1u);
}

TEST_F(HttpTest, InputListedOncePerCauseAfterTwoOpens) {
  std::string id = Create("new a.(b<a> | c<a> | a(z))", "rpi");
  StepWhere(id, Extrusion("b"));
  StepWhere(id, Extrusion("c"));
  std::vector<Json> causes;
  for (const Json& t : Get("/sessions/" + id + "/transitions?dir=fwd"))
    if (t["action"]["type"] == "in") causes.push_back(t["cause"]);
  ASSERT_EQ(causes.size(), 2u);
  EXPECT_EQ(causes[0], Json::parse("[1]"));
  EXPECT_EQ(causes[1], Json::parse("[2]"));
  // Step all the way back.
  for (int n = 0; n < 2; ++n) {
    Json bwd = Get("/sessions/" + id + "/transitions?dir=bwd");
    ASSERT_FALSE(bwd.empty());
    Post("/sessions/" + id + "/step", {{"transition_id", bwd[0]["id"]}}, 200);
  }
  EXPECT_EQ(Get("/sessions/" + id + "/state")["text"], "new a.b<a> | c<a> | a(z)");
  EXPECT_EQ(Get("/sessions/" + id + "/replay")["ok"], true);
}

TEST_F(HttpTest, BsCausalityGraph) {
  std::string id = Create("new a.(b<a> | c<a> | a(z))", "bs");
  StepWhere(id, Extrusion("b"));
  StepWhere(id, Extrusion("c"));
  StepWhere(id, [](const Json& t) { return t["action"]["type"] == "in"; });
  Json g = Get("/sessions/" + id + "/causality");
  ASSERT_EQ(g["nodes"].size(), 3u);
  std::set<std::pair<int, int>> object;
  for (const Json& e : g["edges"])
    if (e["type"] == "object") object.insert({e["from"].get<int>(), e["to"].get<int>()});
  EXPECT_EQ(object, (std::set<std::pair<int, int>>{{0, 1}, {0, 2}}));
}

TEST_F(HttpTest, StaleTransitionIsConflict) {
  std::string id = Create("a<b> | c<d>", "cvy");
  Json listing = Get("/sessions/" + id + "/transitions");
  Post("/sessions/" + id + "/step", {{"transition_id", listing[0]["id"]}}, 200);
  Json err = Post("/sessions/" + id + "/step", {{"transition_id", listing[1]["id"]}}, 409);
  EXPECT_TRUE(err.contains("error"));
}

TEST_F(HttpTest, Errors) {
  Get("/sessions/nope/state", 404);
  Get("/sessions/nope/transitions", 404);
  Post("/sessions/nope/step", {{"transition_id", 1}}, 404);
  Json bad = Post("/sessions", {{"source", "b<a."}, {"semantics", "rpi"}}, 400);
  EXPECT_EQ(bad["column"], 4);
  Post("/sessions", {{"source", "0"}, {"semantics", "xyz"}}, 400);
  Post("/sessions", {{"semantics", "rpi"}}, 400);
  std::string id = Create("a<b>", "rpi");
  Post("/sessions/" + id + "/step", {{"transition_id", "one"}}, 400);
  Get("/sessions/" + id + "/transitions?dir=sideways", 400);
  auto res = client_->Post("/sessions", "{not json", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
}

TEST_F(HttpTest, DeleteSession) {
  std::string id = Create("a<b>", "rpi");
  auto res = client_->Delete("/sessions/" + id);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  Get("/sessions/" + id + "/state", 404);
  res = client_->Delete("/sessions/" + id);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
}

TEST_F(HttpTest, CorsAndCorpus) {
  auto res = client_->Options("/sessions");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 204);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
  Json corpus = Get("/corpus");
  EXPECT_EQ(corpus["entries"].size(), DefaultCorpus().size());
  EXPECT_EQ(corpus["depth"], 4);
}

TEST_F(HttpTest, ParallelSessions) {
  std::vector<std::thread> clients;
  std::atomic<int> failures{0};
  for (int c = 0; c < 4; ++c) {
    clients.emplace_back([&] {
      httplib::Client client("127.0.0.1", port_);
      auto res = client.Post("/sessions", R"({"source":"a<b> | c<d> | e<f>","semantics":"bs"})", "application/json");
      if (!res || res->status != 201) return void(++failures);
      std::string id = Json::parse(res->body)["id"];
      for (int n = 0; n < 3; ++n) {
        auto listing = client.Get("/sessions/" + id + "/transitions?dir=fwd");
        Json ts = Json::parse(listing->body);
        Json body{{"transition_id", ts[0]["id"]}};
        auto step = client.Post("/sessions/" + id + "/step", body.dump(), "application/json");
        if (!step || step->status != 200) ++failures;
      }
      auto replay = client.Get("/sessions/" + id + "/replay");
      if (!replay || Json::parse(replay->body)["ok"] != true) ++failures;
    });
  }
  for (auto& t : clients) t.join();
  EXPECT_EQ(failures.load(), 0);
}

}  // namespace
}  // namespace rpi
