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

#ifndef RPI_SEMANTICS_HPP_
#define RPI_SEMANTICS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rpi/memory.hpp"
#include "rpi/syntax.hpp"

namespace rpi {

/// The action part of a label: b<a>, b(x), b<(a)>_m, or tau.
struct Action {
  enum class Kind { kOut, kIn, kBoundOut, kTau };

  Kind kind = Kind::kTau;
  std::string subject;
  std::string object;            // sent name, or the binder for kIn
  std::optional<Memory> memory;  // kBoundOut: the memory read by Open

  static Action Out(std::string b, std::string a) { return {Kind::kOut, std::move(b), std::move(a), std::nullopt}; }
  static Action In(std::string b, std::string x) { return {Kind::kIn, std::move(b), std::move(x), std::nullopt}; }
  static Action BoundOut(std::string b, std::string a, Memory m) {
    return {Kind::kBoundOut, std::move(b), std::move(a), std::move(m)};
  }
  static Action Tau() { return {}; }

  bool IsOutput() const { return kind == Kind::kOut || kind == Kind::kBoundOut; }
  bool HasSubject(const std::string& a) const { return kind != Kind::kTau && subject == a; }
  bool HasObject(const std::string& a) const { return IsOutput() && object == a; }

  std::string ToString() const;
  friend bool operator==(const Action&, const Action&) = default;
};

/// (key, cause, instantiator): action
struct Label {
  Key key = 0;
  CauseSet cause = NoCause();
  Key inst = kStar;
  Action action;

  std::string ToString() const;
  friend bool operator==(const Label&, const Label&) = default;
};

enum class Direction { kForward, kBackward };

std::string_view ToString(Direction dir);

struct Transition {
  RPtr source;
  Label label;
  Direction dir = Direction::kForward;
  RPtr target;
  /// Positions of the prefixes fired or undone (see SitesWithKey).
  std::vector<Site> sites;

  std::string ToString() const;
};

/// The reverse transition: same label, endpoints and direction swapped.
Transition Reverse(const Transition& t);

/// Fault injection for mutation tests of the checkers.
enum class Fault {
  kNone,
  kDropOutputUndo,    // the backward rule for top-level past outputs is missing
  kSkipSubstitution,  // communication does not instantiate the received name
  kKeepRestrictionOnOpen,  // Open leaves the memory unchanged
};

/**
 * The labelled transition system of reversible processes for one memory
 * kind. Enumeration order is canonical: left operand before right, single
 * moves before communications, and causes in ascending order.
 */
class Engine {
 public:
  explicit Engine(SemanticsKind kind, Fault fault = Fault::kNone) : kind_(kind), fault_(fault) {}

  SemanticsKind kind() const { return kind_; }

  /// Every forward transition that fires with the given fresh key.
  std::vector<Transition> Forward(const RPtr& x, Key fresh) const;
  /// Forward transitions using DefaultFreshKey(x).
  std::vector<Transition> Forward(const RPtr& x) const { return Forward(x, DefaultFreshKey(x)); }
  std::vector<Transition> Backward(const RPtr& x) const;

  /// Smallest positive key not occurring anywhere in x.
  static Key DefaultFreshKey(const RPtr& x);

 private:
  struct Move {
    Label label;
    RPtr target;
  };

  std::vector<Move> DeriveForward(const RPtr& x, Key i) const;
  std::vector<Move> DeriveBackward(const RPtr& x) const;
  void Communicate(const Move& l, const Move& r, Key i, std::vector<Move>& out) const;
  void Uncommunicate(const Move& l, const Move& r, const RProcess* close, std::vector<Move>& out) const;

  SemanticsKind kind_;
  Fault fault_;
};

std::vector<Transition> ForwardSteps(const RPtr& x, SemanticsKind kind, Key fresh);
std::vector<Transition> BackwardSteps(const RPtr& x, SemanticsKind kind);

/// Contextual cause update: the past prefix keyed i gets cause k.
RPtr ApplyCauseUpdate(const RPtr& x, Key i, const CauseSet& k);

/// Erasing function on labels.
PiLabel EraseLabel(const Label& label);

}  // namespace rpi

#endif  // RPI_SEMANTICS_HPP_
