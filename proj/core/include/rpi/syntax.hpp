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

#ifndef RPI_SYNTAX_HPP_
#define RPI_SYNTAX_HPP_

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rpi/memory.hpp"

namespace rpi {

// ---------------------------------------------------------------------------
// Plain pi-calculus processes.
// ---------------------------------------------------------------------------

struct Process;
using ProcessPtr = std::shared_ptr<const Process>;

/// Immutable pi-calculus term: 0, b<a>.P, b(x).P, P | Q, new a.P.
struct Process {
  enum class Kind { kNil, kOut, kIn, kPar, kNew };

  Kind kind = Kind::kNil;
  std::string subject;  // kOut, kIn
  std::string object;   // kOut: sent name; kIn: binder; kNew: restricted name
  ProcessPtr left;      // continuation, restriction body, or left branch
  ProcessPtr right;     // kPar only
};

ProcessPtr Nil();
ProcessPtr Out(std::string subject, std::string object, ProcessPtr cont = Nil());
ProcessPtr In(std::string subject, std::string binder, ProcessPtr cont = Nil());
ProcessPtr Par(ProcessPtr left, ProcessPtr right);
ProcessPtr New(std::string name, ProcessPtr body);

bool Equal(const ProcessPtr& p, const ProcessPtr& q);
std::string ToString(const ProcessPtr& p);
std::set<std::string> FreeNames(const ProcessPtr& p);
/// Every identifier occurring in p, bound or free.
std::set<std::string> AllNames(const ProcessPtr& p);

/// Capture-avoiding p{a/x}.
ProcessPtr Substitute(const ProcessPtr& p, const std::string& var, const std::string& a);
/// Renames the binder of a restriction/input node (the node itself, not a
/// subterm) to `fresh`, consistently in its scope.
ProcessPtr RenameBound(const ProcessPtr& node, const std::string& fresh);

/// Alpha-normal form: bound names replaced by positional canonical names.
std::string CanonicalString(const ProcessPtr& p);
bool AlphaEqual(const ProcessPtr& p, const ProcessPtr& q);

/// Deterministic fresh-name supply: `base_N` with the smallest N >= 1 not in
/// `avoid`.
std::string FreshName(const std::string& base, const std::set<std::string>& avoid);

/// Labels of the standard (late) pi-calculus LTS, also the image of the
/// erasing function on framework labels.
struct PiLabel {
  enum class Kind { kOut, kIn, kBoundOut, kTau };
  Kind kind = Kind::kTau;
  std::string subject;
  std::string object;  // sent name, or the binder for kIn

  std::string ToString() const;
  friend bool operator==(const PiLabel&, const PiLabel&) = default;
  friend auto operator<=>(const PiLabel&, const PiLabel&) = default;
};

// ---------------------------------------------------------------------------
// Reversible processes.
// ---------------------------------------------------------------------------

/// A channel name decorated with its instantiator (kStar when none).
struct Name {
  std::string base;
  Key inst = kStar;

  std::string ToString() const;
  friend bool operator==(const Name&, const Name&) = default;
  friend auto operator<=>(const Name&, const Name&) = default;
};

/// Decoration of a past prefix: its key and contextual cause set.
struct Event {
  Key key = 0;
  CauseSet cause = NoCause();

  friend bool operator==(const Event&, const Event&) = default;
};

struct RProcess;
using RPtr = std::shared_ptr<const RProcess>;

/**
 * Immutable reversible process.
 *
 * A prefix with `event` set is a past prefix (history); without it, it is a
 * pending prefix of the lifted part. Restrictions always carry a memory;
 * an empty memory makes `new a` an ordinary binder.
 */
struct RProcess {
  enum class Kind { kNil, kOut, kIn, kPar, kNew };

  Kind kind = Kind::kNil;
  Name subject;               // kOut, kIn
  Name object;                // kOut
  std::string binder;         // kIn
  std::optional<Event> event;  // past prefixes only
  std::string name;           // kNew
  Memory memory;              // kNew
  RPtr left;                  // continuation, restriction body, or left branch
  RPtr right;                 // kPar only

  bool IsPrefix() const { return kind == Kind::kOut || kind == Kind::kIn; }
  bool IsPast() const { return event.has_value(); }
};

RPtr RNil();
RPtr ROut(Name subject, Name object, RPtr cont, std::optional<Event> event = std::nullopt);
RPtr RIn(Name subject, std::string binder, RPtr cont, std::optional<Event> event = std::nullopt);
RPtr RPar(RPtr left, RPtr right);
RPtr RNew(std::string name, Memory memory, RPtr body);

/// Copy of a prefix node with a different continuation / event.
RPtr WithCont(const RPtr& prefix, RPtr cont);
RPtr WithEvent(const RPtr& prefix, std::optional<Event> event);

bool Equal(const RPtr& x, const RPtr& y);
std::string ToString(const RPtr& x);

/// Lifting: every name gets instantiator `*`, every restriction an
/// initialised memory of the given kind.
RPtr Lift(const ProcessPtr& p, SemanticsKind kind);

/// True when x has no past prefixes and every memory is empty.
bool IsLifted(const RPtr& x);

/// Communication keys as a multiset (the two ends of a communication share
/// a key, so that key appears twice).
std::multiset<Key> KeySet(const RPtr& x);
bool Fresh(Key i, const RPtr& x);
/// True when i occurs anywhere in x: as a prefix key, inside a cause set, as
/// an instantiator, or inside a memory.
bool Occurs(Key i, const RPtr& x);
/// Largest key occurring anywhere in x (kStar when none).
Key MaxKey(const RPtr& x);

std::set<std::string> AllNames(const RPtr& x);

/// Replaces every free occurrence of variable `var` in the active part of x
/// by the name a^i. History prefixes are left untouched; binders of the
/// lifted part are alpha-renamed when they would capture `a`.
RPtr Substitute(const RPtr& x, const std::string& var, const std::string& a, Key i);

/// Inverse substitution: every occurrence of the name a^i becomes `var`.
RPtr Unsubstitute(const RPtr& x, const std::string& a, Key i, const std::string& var);

/// The erasing function onto plain pi-calculus.
ProcessPtr Erase(const RPtr& x);

/// Alpha-normal printing: binders of the lifted part and restrictions with an
/// empty memory are renamed positionally. Equal strings mean equal processes
/// up to alpha-conversion.
std::string CanonicalString(const RPtr& x);

// ---------------------------------------------------------------------------
// Contexts.
// ---------------------------------------------------------------------------

/// One layer of a general context. A kPast frame is a past prefix whose
/// continuation is the hole; the history context is the chain of kPast
/// frames directly above the hole.
struct ContextFrame {
  enum class Kind { kPast, kParLeft, kParRight, kNew };
  Kind kind;
  RPtr node;  // the original node; its hole-side child is replaced on Plug
};

/// A term with one hole, outermost frame first.
struct Context {
  std::vector<ContextFrame> frames;

  RPtr Plug(RPtr hole) const;
  bool IsHistory() const;
};

/// All decompositions x = C[alpha[key,K].Y]: each result plugs back to x and
/// has the past prefix keyed `key` at the hole.
std::vector<std::pair<Context, RPtr>> FindPast(const RPtr& x, Key key);

/// Position of every prefix in x as a path of 'L' / 'R' (par branches) and
/// 'C' (prefix continuation) steps. Restriction nodes are skipped so that
/// positions survive the restriction erected by a communication.
using Site = std::string;
std::vector<Site> SitesWithKey(const RPtr& x, Key key);

}  // namespace rpi

#endif  // RPI_SYNTAX_HPP_
