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

#include "rpi/http_service.hpp"

#include <httplib.h>

#include "rpi/parser.hpp"

namespace rpi {

namespace {

void Reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void Fail(httplib::Response& res, int status, const std::string& message) {
  Reply(res, status, Json{{"error", message}});
}

}  // namespace

struct HttpService::Impl {
  SessionStore& store;
  ServiceOptions options;
  httplib::Server server;

  Impl(SessionStore& s, ServiceOptions o) : store(s), options(std::move(o)) {}

  std::shared_ptr<Session> Lookup(const httplib::Request& req, httplib::Response& res) {
    auto session = store.Find(req.matches[1]);
    if (!session) Fail(res, 404, "unknown session '" + std::string(req.matches[1]) + "'");
    return session;
  }

  void Routes();
};

void HttpService::Impl::Routes() {
  server.set_default_headers({{"Access-Control-Allow-Origin", options.allowed_origin},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});

  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    Json body = Json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object() || !body.contains("source") || !body["source"].is_string()) {
      return Fail(res, 400, "expected {\"source\": string, \"semantics\": \"rpi|bs|cvy\"}");
    }
    std::string kind_text = body.value("semantics", std::string("rpi"));
    auto kind = ParseSemanticsKind(kind_text);
    if (!kind) return Fail(res, 400, "unknown semantics '" + kind_text + "'");
    try {
      auto session = store.Create(body["source"].get<std::string>(), *kind);
      Reply(res, 201, {{"id", session->id()}, {"semantics", kind_text}, {"state", session->StateJson()}});
    } catch (const ParseError& e) {
      Reply(res, 400, {{"error", e.what()}, {"line", e.line()}, {"column", e.column()}});
    }
  });

  server.Get(R"(/sessions/([^/]+)/state)", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto s = Lookup(req, res)) Reply(res, 200, s->StateJson());
  });

  server.Get(R"(/sessions/([^/]+)/transitions)", [this](const httplib::Request& req, httplib::Response& res) {
    auto s = Lookup(req, res);
    if (!s) return;
    std::optional<Direction> dir;
    if (req.has_param("dir")) {
      std::string d = req.get_param_value("dir");
      if (d == "fwd") {
        dir = Direction::kForward;
      } else if (d == "bwd") {
        dir = Direction::kBackward;
      } else {
        return Fail(res, 400, "dir must be fwd or bwd");
      }
    }
    Reply(res, 200, s->TransitionsJson(dir));
  });

  server.Post(R"(/sessions/([^/]+)/step)", [this](const httplib::Request& req, httplib::Response& res) {
    auto s = Lookup(req, res);
    if (!s) return;
    Json body = Json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object() || !body.contains("transition_id") ||
        !body["transition_id"].is_number_unsigned()) {
      return Fail(res, 400, "expected {\"transition_id\": non-negative integer}");
    }
    Transition taken;
    if (s->Step(body["transition_id"].get<TransitionId>(), &taken) == Session::StepResult::kExpired) {
      return Fail(res, 409, "transition is not enabled in the current state");
    }
    Json t = ToJson(taken.label);
    t["dir"] = std::string(ToString(taken.dir));
    t["text"] = taken.label.ToString();
    Reply(res, 200, {{"transition", t}, {"state", s->StateJson()}});
  });

  server.Get(R"(/sessions/([^/]+)/trace)", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto s = Lookup(req, res)) Reply(res, 200, s->TraceJson());
  });

  server.Get(R"(/sessions/([^/]+)/causality)", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto s = Lookup(req, res)) Reply(res, 200, s->CausalityJson());
  });

  server.Get(R"(/sessions/([^/]+)/replay)", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto s = Lookup(req, res)) Reply(res, 200, {{"ok", s->Replay()}, {"steps", s->History().size()}});
  });

  server.Delete(R"(/sessions/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    if (!store.Erase(req.matches[1])) return Fail(res, 404, "unknown session '" + std::string(req.matches[1]) + "'");
    Reply(res, 200, {{"deleted", std::string(req.matches[1])}});
  });

  server.Get("/corpus", [this](const httplib::Request&, httplib::Response& res) {
    Json entries = Json::array();
    for (const auto& e : options.corpus) {
      entries.push_back({{"name", e.name}, {"source", e.source}, {"depth", e.depth}});
    }
    Reply(res, 200, {{"depth", options.depth}, {"entries", entries}});
  });
}

HttpService::HttpService(SessionStore& store, ServiceOptions options)
    : impl_(std::make_unique<Impl>(store, std::move(options))) {
  impl_->Routes();
}

HttpService::~HttpService() = default;

int HttpService::Bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpService::Run() { return impl_->server.listen_after_bind(); }

void HttpService::Stop() { impl_->server.stop(); }

}  // namespace rpi
