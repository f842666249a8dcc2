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

#include "rpi/session.hpp"

#include <algorithm>

#include "rpi/bs_oracle.hpp"
#include "rpi/parser.hpp"

namespace rpi {

Session::Session(std::string id, std::string source, SemanticsKind kind, RPtr initial)
    : id_(std::move(id)),
      source_(std::move(source)),
      kind_(kind),
      engine_(kind),
      initial_(initial),
      current_(std::move(initial)),
      next_key_(MaxKey(initial_) + 1) {
  Enumerate();
}

void Session::Enumerate() {
  enabled_.clear();
  for (Transition& t : engine_.Forward(current_, next_key_)) enabled_.push_back({next_id_++, std::move(t)});
  for (Transition& t : engine_.Backward(current_)) enabled_.push_back({next_id_++, std::move(t)});
}

RPtr Session::State() const {
  std::lock_guard lock(mu_);
  return current_;
}

Trace Session::History() const {
  std::lock_guard lock(mu_);
  return trace_;
}

std::vector<ListedTransition> Session::Transitions(std::optional<Direction> dir) const {
  std::lock_guard lock(mu_);
  std::vector<ListedTransition> out;
  for (const auto& e : enabled_) {
    if (!dir || e.transition.dir == *dir) out.push_back(e);
  }
  return out;
}

Session::StepResult Session::Step(TransitionId id, Transition* taken) {
  std::lock_guard lock(mu_);
  auto it = std::find_if(enabled_.begin(), enabled_.end(), [&](const auto& e) { return e.id == id; });
  if (it == enabled_.end()) return StepResult::kExpired;
  Transition t = it->transition;
  if (t.dir == Direction::kForward) next_key_ = std::max(next_key_, t.label.key) + 1;
  current_ = t.target;
  trace_.push_back(t);
  if (taken) *taken = t;
  Enumerate();
  return StepResult::kOk;
}

std::optional<Transition> ReplayStep(const RPtr& x, const Transition& recorded, const Engine& engine) {
  auto candidates = recorded.dir == Direction::kForward ? engine.Forward(x, recorded.label.key) : engine.Backward(x);
  for (Transition& t : candidates) {
    if (t.label == recorded.label && Equal(t.target, recorded.target)) return std::move(t);
  }
  return std::nullopt;
}

bool Session::Replay() const {
  std::lock_guard lock(mu_);
  RPtr x = initial_;
  for (const Transition& t : trace_) {
    auto step = ReplayStep(x, t, engine_);
    if (!step) return false;
    x = step->target;
  }
  return Equal(x, current_);
}

Json Session::StateJson() const {
  std::lock_guard lock(mu_);
  Json j = ToJson(current_);
  j["semantics"] = std::string(ToString(kind_));
  j["steps"] = trace_.size();
  return j;
}

Json Session::TransitionsJson(std::optional<Direction> dir) const {
  Json out = Json::array();
  for (const auto& e : Transitions(dir)) {
    Json j = ToJson(e.transition);
    j["id"] = e.id;
    out.push_back(std::move(j));
  }
  return out;
}

Json Session::TraceJson() const {
  std::lock_guard lock(mu_);
  Json steps = Json::array();
  for (std::size_t p = 0; p < trace_.size(); ++p) {
    const Transition& t = trace_[p];
    Json j = ToJson(t.label);
    j["index"] = p;
    j["dir"] = std::string(ToString(t.dir));
    j["text"] = t.label.ToString();
    // K_F is read off the state in which the event is part of the history.
    const RPtr& with_event = t.dir == Direction::kForward ? t.target : t.source;
    Json kf = Json::array();
    for (Key k : StructuralCauses(BuildDependencyGraph(with_event), t.label.key)) kf.push_back(k);
    j["kf"] = std::move(kf);
    steps.push_back(std::move(j));
  }
  return {{"initial", ToJson(initial_)}, {"steps", steps}, {"state", ToJson(current_)}};
}

Json Session::CausalityJson() const { return CausalityToJson(History()); }

std::shared_ptr<Session> SessionStore::Create(const std::string& source, SemanticsKind kind) {
  RPtr initial = Lift(ParseProcess(source), kind);
  std::lock_guard lock(mu_);
  std::string id = "s" + std::to_string(++counter_);
  auto session = std::make_shared<Session>(id, source, kind, initial);
  sessions_[id] = session;
  return session;
}

std::shared_ptr<Session> SessionStore::Find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

bool SessionStore::Erase(const std::string& id) {
  std::lock_guard lock(mu_);
  return sessions_.erase(id) != 0;
}

std::size_t SessionStore::Size() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

}  // namespace rpi
