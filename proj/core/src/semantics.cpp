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

#include "rpi/semantics.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rpi/extrusion.hpp"

namespace rpi {

std::string Action::ToString() const {
  switch (kind) {
    case Kind::kOut: return subject + "<" + object + ">";
    case Kind::kIn: return subject + "(" + object + ")";
    case Kind::kBoundOut: return subject + "<(" + object + ")>_" + memory->ToString();
    case Kind::kTau: return "tau";
  }
  return "?";
}

std::string Label::ToString() const {
  return "(" + std::to_string(key) + "," + CauseToString(cause) + "," + KeyToString(inst) + "):" + action.ToString();
}

std::string_view ToString(Direction dir) { return dir == Direction::kForward ? "fwd" : "bwd"; }

std::string Transition::ToString() const {
  return rpi::ToString(source) + (dir == Direction::kForward ? " --" : " ~~") + label.ToString() +
         (dir == Direction::kForward ? "--> " : "~~> ") + rpi::ToString(target);
}

Transition Reverse(const Transition& t) {
  Transition r = t;
  std::swap(r.source, r.target);
  r.dir = t.dir == Direction::kForward ? Direction::kBackward : Direction::kForward;
  return r;
}

namespace {

/// Applies `fn` to the continuation of the past input keyed i.
template <class F>
RPtr MapInputCont(const RPtr& x, Key i, const F& fn) {
  switch (x->kind) {
    case RProcess::Kind::kNil: return x;
    case RProcess::Kind::kIn:
      if (x->event && x->event->key == i) return WithCont(x, fn(x->left));
      [[fallthrough]];
    case RProcess::Kind::kOut:
      if (!x->event) return x;
      return WithCont(x, MapInputCont(x->left, i, fn));
    case RProcess::Kind::kPar: return RPar(MapInputCont(x->left, i, fn), MapInputCont(x->right, i, fn));
    case RProcess::Kind::kNew: return RNew(x->name, x->memory, MapInputCont(x->left, i, fn));
  }
  return x;
}

bool Admits(const std::vector<CauseSet>& candidates, const CauseSet& k) {
  return std::find(candidates.begin(), candidates.end(), k) != candidates.end();
}

Label Tau(Key i) { return Label{i, NoCause(), kStar, Action::Tau()}; }

}  // namespace

RPtr ApplyCauseUpdate(const RPtr& x, Key i, const CauseSet& k) {
  switch (x->kind) {
    case RProcess::Kind::kNil: return x;
    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn: {
      if (!x->event) return x;
      RPtr cont = ApplyCauseUpdate(x->left, i, k);
      if (x->event->key != i) return WithCont(x, cont);
      return WithCont(WithEvent(x, Event{i, k}), cont);
    }
    case RProcess::Kind::kPar: return RPar(ApplyCauseUpdate(x->left, i, k), ApplyCauseUpdate(x->right, i, k));
    case RProcess::Kind::kNew: return RNew(x->name, x->memory, ApplyCauseUpdate(x->left, i, k));
  }
  return x;
}

Key Engine::DefaultFreshKey(const RPtr& x) {
  Key k = 1;
  while (Occurs(k, x)) ++k;
  return k;
}

// ---- forward rules ----

std::vector<Engine::Move> Engine::DeriveForward(const RPtr& x, Key i) const {
  std::vector<Move> out;
  switch (x->kind) {
    case RProcess::Kind::kNil: break;

    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn: {
      if (!x->event) {
        // Out1 / In1: a pending prefix fires with the fresh key and no cause.
        Action act = x->kind == RProcess::Kind::kOut ? Action::Out(x->subject.base, x->object.base)
                                                     : Action::In(x->subject.base, x->binder);
        out.push_back({Label{i, NoCause(), x->subject.inst, act}, WithEvent(x, Event{i, NoCause()})});
        break;
      }
      // Out2 / In2, for any action of the continuation.
      if (x->event->key == i) break;
      for (auto& m : DeriveForward(x->left, i)) out.push_back({m.label, WithCont(x, m.target)});
      break;
    }

    case RProcess::Kind::kPar: {
      auto left = DeriveForward(x->left, i);
      auto right = DeriveForward(x->right, i);
      for (const auto& m : left)
        if (!Occurs(i, x->right)) out.push_back({m.label, RPar(m.target, x->right)});
      for (const auto& m : right)
        if (!Occurs(i, x->left)) out.push_back({m.label, RPar(x->left, m.target)});
      for (const auto& l : left)
        for (const auto& r : right) Communicate(l, r, i, out);
      break;
    }

    case RProcess::Kind::kNew: {
      const std::string& a = x->name;
      const Memory& delta = x->memory;
      for (auto& m : DeriveForward(x->left, i)) {
        const Action& act = m.label.action;
        bool subj = act.HasSubject(a);
        bool obj = act.HasObject(a);
        if (!subj && !obj) {
          // Res
          out.push_back({m.label, RNew(a, delta, m.target)});
        } else if (obj && (!subj || !delta.Empty())) {
          // Open. When a is also the subject the cause is first refined as
          // by Cause Ref.
          std::set<CauseSet> causes;
          std::vector<CauseSet> base = subj ? CauseCandidates(delta, m.label.cause, m.target)
                                            : std::vector<CauseSet>{m.label.cause};
          for (const auto& k : base)
            for (auto& k2 : UpdateCandidates(delta, k)) causes.insert(std::move(k2));
          Memory stored = fault_ == Fault::kKeepRestrictionOnOpen ? delta : delta.Add(i);
          for (const auto& k : causes) {
            Label label{i, k, m.label.inst, Action::BoundOut(act.subject, a, delta)};
            out.push_back({label, RNew(a, stored, ApplyCauseUpdate(m.target, i, k))});
          }
        } else if (subj && !delta.Empty()) {
          // Cause Ref
          std::set<CauseSet> causes;
          for (auto& k : CauseCandidates(delta, m.label.cause, m.target)) causes.insert(std::move(k));
          for (const auto& k : causes) {
            Label label = m.label;
            label.cause = k;
            out.push_back({label, RNew(a, delta, ApplyCauseUpdate(m.target, i, k))});
          }
        }
        // Otherwise the subject is still private: no rule applies.
      }
      break;
    }
  }
  return out;
}

void Engine::Communicate(const Move& l, const Move& r, Key i, std::vector<Move>& out) const {
  const bool out_left = l.label.action.IsOutput() && r.label.action.kind == Action::Kind::kIn;
  const bool out_right = r.label.action.IsOutput() && l.label.action.kind == Action::Kind::kIn;
  if (!out_left && !out_right) return;
  const Move& snd = out_left ? l : r;
  const Move& rcv = out_left ? r : l;
  if (snd.label.action.subject != rcv.label.action.subject) return;
  if (!StarCompatible(snd.label.cause, rcv.label.inst) || !StarCompatible(rcv.label.cause, snd.label.inst)) return;

  const std::string& a = snd.label.action.object;
  const std::string& x = rcv.label.action.object;
  RPtr received = rcv.target;
  if (fault_ != Fault::kSkipSubstitution)
    received = MapInputCont(rcv.target, i, [&](const RPtr& cont) { return Substitute(cont, x, a, i); });

  if (snd.label.action.kind == Action::Kind::kOut) {
    // Com
    RPtr target = out_left ? RPar(snd.target, received) : RPar(received, snd.target);
    out.push_back({Tau(i), target});
  } else {
    // Close: the extruded name is restricted again over both sides.
    RPtr sent = RemoveKey(snd.target, i);
    RPtr body = out_left ? RPar(sent, received) : RPar(received, sent);
    out.push_back({Tau(i), RNew(a, *snd.label.action.memory, body)});
  }
}

// ---- backward rules ----

std::vector<Engine::Move> Engine::DeriveBackward(const RPtr& x) const {
  std::vector<Move> out;
  switch (x->kind) {
    case RProcess::Kind::kNil: break;

    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn: {
      if (!x->event) break;
      const Event& ev = *x->event;
      if (IsLifted(x->left)) {
        // Out1* / In1*
        if (x->kind == RProcess::Kind::kOut && fault_ == Fault::kDropOutputUndo) break;
        Action act = x->kind == RProcess::Kind::kOut ? Action::Out(x->subject.base, x->object.base)
                                                     : Action::In(x->subject.base, x->binder);
        out.push_back({Label{ev.key, ev.cause, x->subject.inst, act}, WithEvent(x, std::nullopt)});
        break;
      }
      // Out2* / In2*
      for (auto& m : DeriveBackward(x->left)) {
        if (m.label.key == ev.key || !Fresh(m.label.key, m.target)) continue;
        out.push_back({m.label, WithCont(x, m.target)});
      }
      break;
    }

    case RProcess::Kind::kPar: {
      auto left = DeriveBackward(x->left);
      auto right = DeriveBackward(x->right);
      for (const auto& m : left)
        if (!Occurs(m.label.key, x->right)) out.push_back({m.label, RPar(m.target, x->right)});
      for (const auto& m : right)
        if (!Occurs(m.label.key, x->left)) out.push_back({m.label, RPar(x->left, m.target)});
      for (const auto& l : left)
        for (const auto& r : right) Uncommunicate(l, r, nullptr, out);
      break;
    }

    case RProcess::Kind::kNew: {
      const std::string& a = x->name;
      const Memory& mem = x->memory;
      for (auto& m : DeriveBackward(x->left)) {
        const Action& act = m.label.action;
        bool subj = act.HasSubject(a);
        bool obj = act.HasObject(a);
        if (!subj && !obj) {
          // Res*
          out.push_back({m.label, RNew(a, mem, m.target)});
        } else if (obj && mem.Contains(m.label.key)) {
          // Open*: the memory loses the undone extruder. The stored cause
          // must still be what the predicates would produce.
          Memory before = mem.Pop(m.label.key);
          if (subj && !Admits(CauseCandidates(before, m.label.cause, x->left), m.label.cause)) continue;
          if (!Admits(UpdateCandidates(before, m.label.cause), m.label.cause)) continue;
          Label label = m.label;
          label.action = Action::BoundOut(act.subject, a, before);
          out.push_back({label, RNew(a, before, m.target)});
        } else if (subj && !obj && !mem.Empty()) {
          // Cause Ref*
          if (!Admits(CauseCandidates(mem, m.label.cause, x->left), m.label.cause)) continue;
          out.push_back({m.label, RNew(a, mem, m.target)});
        }
      }
      if (x->left->kind == RProcess::Kind::kPar) {
        // Close*
        auto left = DeriveBackward(x->left->left);
        auto right = DeriveBackward(x->left->right);
        for (const auto& l : left)
          for (const auto& r : right) Uncommunicate(l, r, x.get(), out);
      }
      break;
    }
  }
  return out;
}

void Engine::Uncommunicate(const Move& l, const Move& r, const RProcess* close, std::vector<Move>& out) const {
  if (l.label.key != r.label.key) return;
  const Action::Kind want = close ? Action::Kind::kBoundOut : Action::Kind::kOut;
  const bool out_left = l.label.action.kind == want && r.label.action.kind == Action::Kind::kIn;
  const bool out_right = r.label.action.kind == want && l.label.action.kind == Action::Kind::kIn;
  if (!out_left && !out_right) return;
  const Move& snd = out_left ? l : r;
  const Move& rcv = out_left ? r : l;
  if (snd.label.action.subject != rcv.label.action.subject) return;
  if (!StarCompatible(snd.label.cause, rcv.label.inst) || !StarCompatible(rcv.label.cause, snd.label.inst)) return;
  if (close && (snd.label.action.object != close->name || *snd.label.action.memory != close->memory)) return;

  const Key i = l.label.key;
  RPtr received = Unsubstitute(rcv.target, snd.label.action.object, i, rcv.label.action.object);
  RPtr target = out_left ? RPar(snd.target, received) : RPar(received, snd.target);
  out.push_back({Tau(i), target});
}

std::vector<Transition> Engine::Forward(const RPtr& x, Key fresh) const {
  std::vector<Transition> out;
  for (auto& m : DeriveForward(x, fresh)) {
    Transition t{x, m.label, Direction::kForward, m.target, SitesWithKey(m.target, fresh)};
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Transition> Engine::Backward(const RPtr& x) const {
  std::vector<Transition> out;
  for (auto& m : DeriveBackward(x)) {
    Transition t{x, m.label, Direction::kBackward, m.target, SitesWithKey(x, m.label.key)};
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Transition> ForwardSteps(const RPtr& x, SemanticsKind kind, Key fresh) {
  return Engine(kind).Forward(x, fresh);
}

std::vector<Transition> BackwardSteps(const RPtr& x, SemanticsKind kind) { return Engine(kind).Backward(x); }

PiLabel EraseLabel(const Label& label) {
  const Action& a = label.action;
  switch (a.kind) {
    case Action::Kind::kOut: return {PiLabel::Kind::kOut, a.subject, a.object};
    case Action::Kind::kIn: return {PiLabel::Kind::kIn, a.subject, a.object};
    case Action::Kind::kBoundOut:
      return {a.memory->Empty() ? PiLabel::Kind::kBoundOut : PiLabel::Kind::kOut, a.subject, a.object};
    case Action::Kind::kTau: return {};
  }
  return {};
}

}  // namespace rpi
