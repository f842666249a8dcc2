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

#ifndef RPI_SESSION_HPP_
#define RPI_SESSION_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rpi/causality.hpp"
#include "rpi/json_codec.hpp"
#include "rpi/semantics.hpp"

namespace rpi {

using TransitionId = std::uint64_t;

struct ListedTransition {
  TransitionId id;
  Transition transition;
};

/**
 * One exploration session. Every state gets a fresh block of transition
 * ids, so an id taken from an earlier listing never matches a transition of
 * the current state. Forward steps draw keys from a counter that only grows,
 * hence keys are never reused within a session. All methods lock.
 */
class Session {
 public:
  Session(std::string id, std::string source, SemanticsKind kind, RPtr initial);

  const std::string& id() const { return id_; }
  SemanticsKind kind() const { return kind_; }
  const std::string& source() const { return source_; }

  RPtr State() const;
  Trace History() const;
  std::vector<ListedTransition> Transitions(std::optional<Direction> dir = std::nullopt) const;

  enum class StepResult { kOk, kExpired };
  StepResult Step(TransitionId id, Transition* taken = nullptr);

  /// Replays the trace from the initial term; true when it reaches State().
  bool Replay() const;

  Json StateJson() const;
  Json TransitionsJson(std::optional<Direction> dir) const;
  /// Trace entries annotated with their structural causes K_F.
  Json TraceJson() const;
  Json CausalityJson() const;

 private:
  void Enumerate();

  mutable std::mutex mu_;
  std::string id_;
  std::string source_;
  SemanticsKind kind_;
  Engine engine_;
  RPtr initial_;
  RPtr current_;
  Trace trace_;
  Key next_key_;
  TransitionId next_id_ = 1;
  std::vector<ListedTransition> enabled_;
};

class SessionStore {
 public:
  /// Throws ParseError on malformed source.
  std::shared_ptr<Session> Create(const std::string& source, SemanticsKind kind);
  std::shared_ptr<Session> Find(const std::string& id) const;
  bool Erase(const std::string& id);
  std::size_t Size() const;

 private:
  mutable std::mutex mu_;
  std::uint64_t counter_ = 0;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

/// Finds the transition of `x` matching a recorded step (same direction,
/// label and target).
std::optional<Transition> ReplayStep(const RPtr& x, const Transition& recorded, const Engine& engine);

}  // namespace rpi

#endif  // RPI_SESSION_HPP_
