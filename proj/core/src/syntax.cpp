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

#include "rpi/syntax.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace rpi {

// ---------------------------------------------------------------------------
// Plain processes
// ---------------------------------------------------------------------------

namespace {

ProcessPtr MakeProcess(Process p) { return std::make_shared<const Process>(std::move(p)); }

bool EndsWithNew(const ProcessPtr& p) {
  switch (p->kind) {
    case Process::Kind::kNew: return true;
    case Process::Kind::kOut:
    case Process::Kind::kIn: return EndsWithNew(p->left);
    default: return false;
  }
}

void Print(const ProcessPtr& p, std::ostream& os);

void PrintPrefixCont(const ProcessPtr& cont, std::ostream& os) {
  if (cont->kind == Process::Kind::kNil) return;
  os << ".";
  if (cont->kind == Process::Kind::kPar) {
    os << "(";
    Print(cont, os);
    os << ")";
  } else {
    Print(cont, os);
  }
}

void Print(const ProcessPtr& p, std::ostream& os) {
  switch (p->kind) {
    case Process::Kind::kNil: os << "0"; break;
    case Process::Kind::kOut:
      os << p->subject << "<" << p->object << ">";
      PrintPrefixCont(p->left, os);
      break;
    case Process::Kind::kIn:
      os << p->subject << "(" << p->object << ")";
      PrintPrefixCont(p->left, os);
      break;
    case Process::Kind::kPar: {
      bool wrap = p->left->kind == Process::Kind::kPar || EndsWithNew(p->left);
      if (wrap) os << "(";
      Print(p->left, os);
      if (wrap) os << ")";
      os << " | ";
      Print(p->right, os);
      break;
    }
    case Process::Kind::kNew:
      os << "new " << p->object << ".";
      Print(p->left, os);
      break;
  }
}

void CollectNames(const ProcessPtr& p, std::set<std::string>& out) {
  switch (p->kind) {
    case Process::Kind::kNil: return;
    case Process::Kind::kOut:
    case Process::Kind::kIn:
      out.insert(p->subject);
      out.insert(p->object);
      CollectNames(p->left, out);
      return;
    case Process::Kind::kPar:
      CollectNames(p->left, out);
      CollectNames(p->right, out);
      return;
    case Process::Kind::kNew:
      out.insert(p->object);
      CollectNames(p->left, out);
      return;
  }
}

ProcessPtr Canonicalize(const ProcessPtr& p, std::map<std::string, std::string> env, int& counter) {
  auto rn = [&env](const std::string& n) {
    auto it = env.find(n);
    return it == env.end() ? n : it->second;
  };
  switch (p->kind) {
    case Process::Kind::kNil: return p;
    case Process::Kind::kOut:
      return Out(rn(p->subject), rn(p->object), Canonicalize(p->left, env, counter));
    case Process::Kind::kIn: {
      std::string subject = rn(p->subject);
      std::string fresh = "%" + std::to_string(++counter);
      env[p->object] = fresh;
      return In(subject, fresh, Canonicalize(p->left, env, counter));
    }
    case Process::Kind::kPar: {
      auto l = Canonicalize(p->left, env, counter);
      return Par(l, Canonicalize(p->right, env, counter));
    }
    case Process::Kind::kNew: {
      std::string fresh = "%" + std::to_string(++counter);
      env[p->object] = fresh;
      return New(fresh, Canonicalize(p->left, env, counter));
    }
  }
  return p;
}

}  // namespace

ProcessPtr Nil() {
  static const ProcessPtr nil = MakeProcess(Process{});
  return nil;
}

ProcessPtr Out(std::string subject, std::string object, ProcessPtr cont) {
  return MakeProcess({Process::Kind::kOut, std::move(subject), std::move(object), std::move(cont), nullptr});
}

ProcessPtr In(std::string subject, std::string binder, ProcessPtr cont) {
  return MakeProcess({Process::Kind::kIn, std::move(subject), std::move(binder), std::move(cont), nullptr});
}

ProcessPtr Par(ProcessPtr left, ProcessPtr right) {
  return MakeProcess({Process::Kind::kPar, "", "", std::move(left), std::move(right)});
}

ProcessPtr New(std::string name, ProcessPtr body) {
  return MakeProcess({Process::Kind::kNew, "", std::move(name), std::move(body), nullptr});
}

bool Equal(const ProcessPtr& p, const ProcessPtr& q) {
  if (p == q) return true;
  if (p->kind != q->kind || p->subject != q->subject || p->object != q->object) return false;
  switch (p->kind) {
    case Process::Kind::kNil: return true;
    case Process::Kind::kPar: return Equal(p->left, q->left) && Equal(p->right, q->right);
    default: return Equal(p->left, q->left);
  }
}

std::string ToString(const ProcessPtr& p) {
  std::ostringstream os;
  Print(p, os);
  return os.str();
}

std::set<std::string> FreeNames(const ProcessPtr& p) {
  std::set<std::string> out;
  switch (p->kind) {
    case Process::Kind::kNil: break;
    case Process::Kind::kOut:
      out = FreeNames(p->left);
      out.insert(p->subject);
      out.insert(p->object);
      break;
    case Process::Kind::kIn:
      out = FreeNames(p->left);
      out.erase(p->object);
      out.insert(p->subject);
      break;
    case Process::Kind::kPar: {
      out = FreeNames(p->left);
      auto r = FreeNames(p->right);
      out.insert(r.begin(), r.end());
      break;
    }
    case Process::Kind::kNew:
      out = FreeNames(p->left);
      out.erase(p->object);
      break;
  }
  return out;
}

std::set<std::string> AllNames(const ProcessPtr& p) {
  std::set<std::string> out;
  CollectNames(p, out);
  return out;
}

std::string FreshName(const std::string& base, const std::set<std::string>& avoid) {
  for (int n = 1;; ++n) {
    std::string candidate = base + "_" + std::to_string(n);
    if (avoid.count(candidate) == 0) return candidate;
  }
}

ProcessPtr RenameBound(const ProcessPtr& node, const std::string& fresh) {
  if (node->kind == Process::Kind::kIn)
    return In(node->subject, fresh, Substitute(node->left, node->object, fresh));
  if (node->kind == Process::Kind::kNew) return New(fresh, Substitute(node->left, node->object, fresh));
  return node;
}

ProcessPtr Substitute(const ProcessPtr& p, const std::string& var, const std::string& a) {
  if (var == a) return p;
  auto sub = [&](const std::string& n) { return n == var ? a : n; };
  switch (p->kind) {
    case Process::Kind::kNil: return p;
    case Process::Kind::kOut: return Out(sub(p->subject), sub(p->object), Substitute(p->left, var, a));
    case Process::Kind::kPar: return Par(Substitute(p->left, var, a), Substitute(p->right, var, a));
    case Process::Kind::kIn:
    case Process::Kind::kNew: {
      const std::string& bound = p->object;
      std::string subject = p->kind == Process::Kind::kIn ? sub(p->subject) : "";
      if (bound == var) {
        return p->kind == Process::Kind::kIn ? In(subject, bound, p->left) : p;
      }
      ProcessPtr node = p;
      if (bound == a && FreeNames(p->left).count(var) != 0) {
        auto avoid = AllNames(p->left);
        avoid.insert(a);
        avoid.insert(var);
        node = RenameBound(p, FreshName(bound, avoid));
      }
      if (node->kind == Process::Kind::kIn) return In(subject, node->object, Substitute(node->left, var, a));
      return New(node->object, Substitute(node->left, var, a));
    }
  }
  return p;
}

std::string CanonicalString(const ProcessPtr& p) {
  int counter = 0;
  return ToString(Canonicalize(p, {}, counter));
}

bool AlphaEqual(const ProcessPtr& p, const ProcessPtr& q) { return CanonicalString(p) == CanonicalString(q); }

std::string PiLabel::ToString() const {
  switch (kind) {
    case Kind::kOut: return subject + "<" + object + ">";
    case Kind::kIn: return subject + "(" + object + ")";
    case Kind::kBoundOut: return subject + "<(" + object + ")>";
    case Kind::kTau: return "tau";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Reversible processes
// ---------------------------------------------------------------------------

std::string Name::ToString() const {
  return inst == kStar ? base : base + "^" + std::to_string(inst);
}

namespace {

RPtr MakeR(RProcess x) { return std::make_shared<const RProcess>(std::move(x)); }

RPtr Rebuild(const RPtr& x, RPtr left, RPtr right = nullptr) {
  RProcess copy = *x;
  copy.left = std::move(left);
  copy.right = std::move(right);
  return MakeR(std::move(copy));
}

bool REndsWithNew(const RPtr& x) {
  switch (x->kind) {
    case RProcess::Kind::kNew: return true;
    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn: return REndsWithNew(x->left);
    default: return false;
  }
}

void PrintR(const RPtr& x, std::ostream& os);

void PrintEvent(const RPtr& x, std::ostream& os) {
  if (x->event) os << "[" << x->event->key << "," << CauseToString(x->event->cause) << "]";
}

void PrintRCont(const RPtr& cont, std::ostream& os) {
  if (cont->kind == RProcess::Kind::kNil) return;
  os << ".";
  if (cont->kind == RProcess::Kind::kPar) {
    os << "(";
    PrintR(cont, os);
    os << ")";
  } else {
    PrintR(cont, os);
  }
}

void PrintR(const RPtr& x, std::ostream& os) {
  switch (x->kind) {
    case RProcess::Kind::kNil: os << "0"; break;
    case RProcess::Kind::kOut:
      os << x->subject.ToString() << "<" << x->object.ToString() << ">";
      PrintEvent(x, os);
      PrintRCont(x->left, os);
      break;
    case RProcess::Kind::kIn:
      os << x->subject.ToString() << "(" << x->binder << ")";
      PrintEvent(x, os);
      PrintRCont(x->left, os);
      break;
    case RProcess::Kind::kPar: {
      bool wrap = x->left->kind == RProcess::Kind::kPar || REndsWithNew(x->left);
      if (wrap) os << "(";
      PrintR(x->left, os);
      if (wrap) os << ")";
      os << " | ";
      PrintR(x->right, os);
      break;
    }
    case RProcess::Kind::kNew:
      os << "new " << x->name;
      if (!x->memory.Empty()) os << x->memory.ToString();
      os << ".";
      PrintR(x->left, os);
      break;
  }
}

void CollectKeys(const RPtr& x, std::multiset<Key>& out) {
  if (x->event) out.insert(x->event->key);
  if (x->left) CollectKeys(x->left, out);
  if (x->right) CollectKeys(x->right, out);
}

template <class F>
void ForEachNode(const RPtr& x, F&& f) {
  f(*x);
  if (x->left) ForEachNode(x->left, f);
  if (x->right) ForEachNode(x->right, f);
}

bool FreeVarIn(const RPtr& x, const std::string& var) {
  switch (x->kind) {
    case RProcess::Kind::kNil: return false;
    case RProcess::Kind::kOut:
      if (x->subject == Name{var, kStar} || x->object == Name{var, kStar}) return true;
      return FreeVarIn(x->left, var);
    case RProcess::Kind::kIn:
      if (x->subject == Name{var, kStar}) return true;
      return x->binder != var && FreeVarIn(x->left, var);
    case RProcess::Kind::kPar: return FreeVarIn(x->left, var) || FreeVarIn(x->right, var);
    case RProcess::Kind::kNew:
      if (x->memory.Empty() && x->name == var) return false;
      return FreeVarIn(x->left, var);
  }
  return false;
}

/// Renames every name with base `from` (any instantiator) to `to`, stopping
/// at binders that shadow `from`.
RPtr RenameBase(const RPtr& x, const std::string& from, const std::string& to) {
  auto rn = [&](const Name& n) { return n.base == from ? Name{to, n.inst} : n; };
  switch (x->kind) {
    case RProcess::Kind::kNil: return x;
    case RProcess::Kind::kOut: {
      RProcess copy = *x;
      copy.subject = rn(x->subject);
      copy.object = rn(x->object);
      copy.left = RenameBase(x->left, from, to);
      return MakeR(std::move(copy));
    }
    case RProcess::Kind::kIn: {
      RProcess copy = *x;
      copy.subject = rn(x->subject);
      if (x->binder != from) copy.left = RenameBase(x->left, from, to);
      return MakeR(std::move(copy));
    }
    case RProcess::Kind::kPar: return RPar(RenameBase(x->left, from, to), RenameBase(x->right, from, to));
    case RProcess::Kind::kNew:
      if (x->memory.Empty() && x->name == from) return x;
      return Rebuild(x, RenameBase(x->left, from, to));
  }
  return x;
}

RPtr CanonicalizeR(const RPtr& x, int& counter) {
  switch (x->kind) {
    case RProcess::Kind::kNil: return x;
    case RProcess::Kind::kOut: return Rebuild(x, CanonicalizeR(x->left, counter));
    case RProcess::Kind::kIn: {
      if (x->event) return Rebuild(x, CanonicalizeR(x->left, counter));
      std::string fresh = "%" + std::to_string(++counter);
      RProcess copy = *x;
      copy.binder = fresh;
      copy.left = CanonicalizeR(RenameBase(x->left, x->binder, fresh), counter);
      return MakeR(std::move(copy));
    }
    case RProcess::Kind::kPar: {
      auto l = CanonicalizeR(x->left, counter);
      return RPar(l, CanonicalizeR(x->right, counter));
    }
    case RProcess::Kind::kNew: {
      if (!x->memory.Empty()) return Rebuild(x, CanonicalizeR(x->left, counter));
      std::string fresh = "%" + std::to_string(++counter);
      return RNew(fresh, x->memory, CanonicalizeR(RenameBase(x->left, x->name, fresh), counter));
    }
  }
  return x;
}

RPtr LiftImpl(const ProcessPtr& p, SemanticsKind kind) {
  switch (p->kind) {
    case Process::Kind::kNil: return RNil();
    case Process::Kind::kOut: return ROut(Name{p->subject}, Name{p->object}, LiftImpl(p->left, kind));
    case Process::Kind::kIn: return RIn(Name{p->subject}, p->object, LiftImpl(p->left, kind));
    case Process::Kind::kPar: return RPar(LiftImpl(p->left, kind), LiftImpl(p->right, kind));
    case Process::Kind::kNew: return RNew(p->object, Memory::Init(kind), LiftImpl(p->left, kind));
  }
  return RNil();
}

}  // namespace

RPtr RNil() {
  static const RPtr nil = MakeR(RProcess{});
  return nil;
}

RPtr ROut(Name subject, Name object, RPtr cont, std::optional<Event> event) {
  RProcess x;
  x.kind = RProcess::Kind::kOut;
  x.subject = std::move(subject);
  x.object = std::move(object);
  x.event = std::move(event);
  x.left = std::move(cont);
  return MakeR(std::move(x));
}

RPtr RIn(Name subject, std::string binder, RPtr cont, std::optional<Event> event) {
  RProcess x;
  x.kind = RProcess::Kind::kIn;
  x.subject = std::move(subject);
  x.binder = std::move(binder);
  x.event = std::move(event);
  x.left = std::move(cont);
  return MakeR(std::move(x));
}

RPtr RPar(RPtr left, RPtr right) {
  RProcess x;
  x.kind = RProcess::Kind::kPar;
  x.left = std::move(left);
  x.right = std::move(right);
  return MakeR(std::move(x));
}

RPtr RNew(std::string name, Memory memory, RPtr body) {
  RProcess x;
  x.kind = RProcess::Kind::kNew;
  x.name = std::move(name);
  x.memory = std::move(memory);
  x.left = std::move(body);
  return MakeR(std::move(x));
}

RPtr WithCont(const RPtr& prefix, RPtr cont) { return Rebuild(prefix, std::move(cont)); }

RPtr WithEvent(const RPtr& prefix, std::optional<Event> event) {
  RProcess copy = *prefix;
  copy.event = std::move(event);
  return MakeR(std::move(copy));
}

bool Equal(const RPtr& x, const RPtr& y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case RProcess::Kind::kNil: return true;
    case RProcess::Kind::kOut:
      return x->subject == y->subject && x->object == y->object && x->event == y->event &&
             Equal(x->left, y->left);
    case RProcess::Kind::kIn:
      return x->subject == y->subject && x->binder == y->binder && x->event == y->event &&
             Equal(x->left, y->left);
    case RProcess::Kind::kPar: return Equal(x->left, y->left) && Equal(x->right, y->right);
    case RProcess::Kind::kNew:
      return x->name == y->name && x->memory == y->memory && Equal(x->left, y->left);
  }
  return false;
}

std::string ToString(const RPtr& x) {
  std::ostringstream os;
  PrintR(x, os);
  return os.str();
}

RPtr Lift(const ProcessPtr& p, SemanticsKind kind) { return LiftImpl(p, kind); }

bool IsLifted(const RPtr& x) {
  bool lifted = true;
  ForEachNode(x, [&](const RProcess& n) {
    if (n.event || (n.kind == RProcess::Kind::kNew && !n.memory.Empty())) lifted = false;
  });
  return lifted;
}

std::multiset<Key> KeySet(const RPtr& x) {
  std::multiset<Key> out;
  CollectKeys(x, out);
  return out;
}

bool Fresh(Key i, const RPtr& x) { return KeySet(x).count(i) == 0; }

bool Occurs(Key i, const RPtr& x) {
  bool found = false;
  ForEachNode(x, [&](const RProcess& n) {
    if (found) return;
    if (n.event && (n.event->key == i || n.event->cause.count(i))) found = true;
    if (n.IsPrefix() && (n.subject.inst == i || (n.kind == RProcess::Kind::kOut && n.object.inst == i)))
      found = true;
    if (n.kind == RProcess::Kind::kNew &&
        (n.memory.gamma.count(i) || n.memory.w == i || n.memory.omega.count(i)))
      found = true;
  });
  return found;
}

Key MaxKey(const RPtr& x) {
  Key max = kStar;
  auto bump = [&max](Key k) { max = std::max(max, k); };
  ForEachNode(x, [&](const RProcess& n) {
    if (n.event) {
      bump(n.event->key);
      for (Key k : n.event->cause) bump(k);
    }
    if (n.IsPrefix()) {
      bump(n.subject.inst);
      bump(n.object.inst);
    }
    if (n.kind == RProcess::Kind::kNew) {
      for (Key k : n.memory.gamma) bump(k);
      bump(n.memory.w);
      for (Key k : n.memory.omega) bump(k);
    }
  });
  return max;
}

std::set<std::string> AllNames(const RPtr& x) {
  std::set<std::string> out;
  ForEachNode(x, [&](const RProcess& n) {
    if (n.IsPrefix()) out.insert(n.subject.base);
    if (n.kind == RProcess::Kind::kOut) out.insert(n.object.base);
    if (n.kind == RProcess::Kind::kIn) out.insert(n.binder);
    if (n.kind == RProcess::Kind::kNew) out.insert(n.name);
  });
  return out;
}

RPtr Substitute(const RPtr& x, const std::string& var, const std::string& a, Key i) {
  const Name target{var, kStar};
  const Name replacement{a, i};
  auto sub = [&](const Name& n) { return n == target ? replacement : n; };
  switch (x->kind) {
    case RProcess::Kind::kNil: return x;
    case RProcess::Kind::kOut: {
      if (x->event) return Rebuild(x, Substitute(x->left, var, a, i));
      RProcess copy = *x;
      copy.subject = sub(x->subject);
      copy.object = sub(x->object);
      copy.left = Substitute(x->left, var, a, i);
      return MakeR(std::move(copy));
    }
    case RProcess::Kind::kIn: {
      RProcess copy = *x;
      if (!x->event) copy.subject = sub(x->subject);
      if (x->binder == var) return MakeR(std::move(copy));
      if (!x->event && x->binder == a && FreeVarIn(x->left, var)) {
        auto avoid = AllNames(x->left);
        avoid.insert(a);
        avoid.insert(var);
        copy.binder = FreshName(x->binder, avoid);
        copy.left = RenameBase(x->left, x->binder, copy.binder);
      }
      copy.left = Substitute(copy.left, var, a, i);
      return MakeR(std::move(copy));
    }
    case RProcess::Kind::kPar: return RPar(Substitute(x->left, var, a, i), Substitute(x->right, var, a, i));
    case RProcess::Kind::kNew: {
      if (!x->memory.Empty()) return Rebuild(x, Substitute(x->left, var, a, i));
      if (x->name == var) return x;
      if (x->name == a && FreeVarIn(x->left, var)) {
        auto avoid = AllNames(x->left);
        avoid.insert(a);
        avoid.insert(var);
        std::string fresh = FreshName(x->name, avoid);
        return RNew(fresh, x->memory, Substitute(RenameBase(x->left, x->name, fresh), var, a, i));
      }
      return Rebuild(x, Substitute(x->left, var, a, i));
    }
  }
  return x;
}

RPtr Unsubstitute(const RPtr& x, const std::string& a, Key i, const std::string& var) {
  const Name target{a, i};
  auto sub = [&](const Name& n) { return n == target ? Name{var, kStar} : n; };
  switch (x->kind) {
    case RProcess::Kind::kNil: return x;
    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn: {
      RProcess copy = *x;
      copy.subject = sub(x->subject);
      if (x->kind == RProcess::Kind::kOut) copy.object = sub(x->object);
      copy.left = Unsubstitute(x->left, a, i, var);
      return MakeR(std::move(copy));
    }
    case RProcess::Kind::kPar: return RPar(Unsubstitute(x->left, a, i, var), Unsubstitute(x->right, a, i, var));
    case RProcess::Kind::kNew: return Rebuild(x, Unsubstitute(x->left, a, i, var));
  }
  return x;
}

ProcessPtr Erase(const RPtr& x) {
  switch (x->kind) {
    case RProcess::Kind::kNil: return Nil();
    case RProcess::Kind::kOut:
      if (x->event) return Erase(x->left);
      return Out(x->subject.base, x->object.base, Erase(x->left));
    case RProcess::Kind::kIn:
      if (x->event) return Erase(x->left);
      return In(x->subject.base, x->binder, Erase(x->left));
    case RProcess::Kind::kPar: return Par(Erase(x->left), Erase(x->right));
    case RProcess::Kind::kNew:
      if (x->memory.Empty()) return New(x->name, Erase(x->left));
      return Erase(x->left);
  }
  return Nil();
}

std::string CanonicalString(const RPtr& x) {
  int counter = 0;
  return ToString(CanonicalizeR(x, counter));
}

// ---------------------------------------------------------------------------
// Contexts
// ---------------------------------------------------------------------------

RPtr Context::Plug(RPtr hole) const {
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    const RPtr& n = it->node;
    switch (it->kind) {
      case ContextFrame::Kind::kPast: hole = WithCont(n, hole); break;
      case ContextFrame::Kind::kParLeft: hole = RPar(hole, n->right); break;
      case ContextFrame::Kind::kParRight: hole = RPar(n->left, hole); break;
      case ContextFrame::Kind::kNew: hole = Rebuild(n, hole); break;
    }
  }
  return hole;
}

bool Context::IsHistory() const {
  for (const auto& f : frames)
    if (f.kind != ContextFrame::Kind::kPast) return false;
  return true;
}

namespace {

void FindPastImpl(const RPtr& x, Key key, Context& ctx, std::vector<std::pair<Context, RPtr>>& out) {
  if (x->event && x->event->key == key) out.emplace_back(ctx, x);
  switch (x->kind) {
    case RProcess::Kind::kNil: return;
    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn:
      // Only past prefixes are context frames; the lifted part has no keys.
      if (!x->event) return;
      ctx.frames.push_back({ContextFrame::Kind::kPast, x});
      FindPastImpl(x->left, key, ctx, out);
      ctx.frames.pop_back();
      return;
    case RProcess::Kind::kPar:
      ctx.frames.push_back({ContextFrame::Kind::kParLeft, x});
      FindPastImpl(x->left, key, ctx, out);
      ctx.frames.back().kind = ContextFrame::Kind::kParRight;
      FindPastImpl(x->right, key, ctx, out);
      ctx.frames.pop_back();
      return;
    case RProcess::Kind::kNew:
      ctx.frames.push_back({ContextFrame::Kind::kNew, x});
      FindPastImpl(x->left, key, ctx, out);
      ctx.frames.pop_back();
      return;
  }
}

void SitesImpl(const RPtr& x, Key key, std::string& path, std::vector<Site>& out) {
  switch (x->kind) {
    case RProcess::Kind::kNil: return;
    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn:
      if (x->event && x->event->key == key) out.push_back(path);
      path.push_back('C');
      SitesImpl(x->left, key, path, out);
      path.pop_back();
      return;
    case RProcess::Kind::kPar:
      path.push_back('L');
      SitesImpl(x->left, key, path, out);
      path.back() = 'R';
      SitesImpl(x->right, key, path, out);
      path.pop_back();
      return;
    case RProcess::Kind::kNew: SitesImpl(x->left, key, path, out); return;
  }
}

}  // namespace

std::vector<std::pair<Context, RPtr>> FindPast(const RPtr& x, Key key) {
  std::vector<std::pair<Context, RPtr>> out;
  Context ctx;
  FindPastImpl(x, key, ctx, out);
  return out;
}

std::vector<Site> SitesWithKey(const RPtr& x, Key key) {
  std::vector<Site> out;
  std::string path;
  SitesImpl(x, key, path, out);
  return out;
}

}  // namespace rpi
