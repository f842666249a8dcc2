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

#include "rpi/causality.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace rpi {

bool StructuralCauseKeys(Key i1, Key i2, const RPtr& x) {
  if (i1 == i2) return false;
  for (const auto& [ctx, prefix] : FindPast(x, i1))
    if (KeySet(prefix->left).count(i2) != 0) return true;
  return false;
}

bool IsReverse(const Transition& t1, const Transition& t2) {
  return t1.dir != t2.dir && t1.label == t2.label && CanonicalString(t1.source) == CanonicalString(t2.target) &&
         CanonicalString(t1.target) == CanonicalString(t2.source);
}

bool StructuralCause(const Transition& t1, const Transition& t2) {
  const Key i1 = t1.label.key;
  const Key i2 = t2.label.key;
  if (IsReverse(t1, t2)) return false;
  if (i1 == i2) return true;
  for (const RPtr* s : {&t1.source, &t1.target, &t2.source, &t2.target})
    if (StructuralCauseKeys(i1, i2, *s) || StructuralCauseKeys(i2, i1, *s)) return true;
  for (const auto& a : t1.sites)
    if (std::find(t2.sites.begin(), t2.sites.end(), a) != t2.sites.end()) return true;
  return false;
}

bool ObjectCause(const Transition& t1, const Transition& t2) {
  if (t1.label.cause.count(t2.label.key) == 0 && t2.label.cause.count(t1.label.key) == 0) return false;
  return !IsReverse(t1, t2);
}

CausalVerdict Relate(const Transition& t1, const Transition& t2) {
  CausalVerdict v;
  v.structural = StructuralCause(t1, t2);
  v.object = ObjectCause(t1, t2);
  v.related = v.structural || v.object;
  v.concurrent = !v.related;
  return v;
}

CausalVerdict Relate(const Transition& t1, const Transition& t2, const Engine& engine) {
  CausalVerdict v = Relate(t1, t2);
  if (!v.related && !IsReverse(t1, t2)) {
    v.interference = CauseInterference(t1, t2, engine);
    v.related = v.interference;
    v.concurrent = !v.related;
  }
  return v;
}

bool LabelsEquivalent(const Label& a, const Label& b) {
  if (a.key != b.key || a.cause != b.cause || a.inst != b.inst) return false;
  const Action& x = a.action;
  const Action& y = b.action;
  return x.kind == y.kind && x.subject == y.subject && x.object == y.object;
}

namespace {

std::vector<Transition> StepsLike(const Engine& engine, const RPtr& x, const Transition& t) {
  std::vector<Transition> out;
  auto all = t.dir == Direction::kForward ? engine.Forward(x, t.label.key) : engine.Backward(x);
  for (auto& s : all)
    if (s.label.key == t.label.key && LabelsEquivalent(s.label, t.label)) out.push_back(std::move(s));
  return out;
}

}  // namespace

std::optional<std::pair<Transition, Transition>> Residual(const Transition& t1, const Transition& t2,
                                                          const Engine& engine) {
  const std::string goal = CanonicalString(t2.target);
  for (auto& t2p : StepsLike(engine, t1.source, t2))
    for (auto& t1p : StepsLike(engine, t2p.target, t1))
      if (CanonicalString(t1p.target) == goal) return std::make_pair(t2p, t1p);
  return std::nullopt;
}

namespace {

void CollectMemories(const RPtr& x, std::multimap<std::string, Memory>& out) {
  if (x->kind == RProcess::Kind::kNew) out.emplace(x->name, x->memory);
  if (x->left) CollectMemories(x->left, out);
  if (x->right) CollectMemories(x->right, out);
}

/// Restricted names whose memory differs between source and target.
std::set<std::string> MemoryWrites(const Transition& t) {
  std::multimap<std::string, Memory> before, after;
  CollectMemories(t.source, before);
  CollectMemories(t.target, after);
  std::set<std::string> out;
  for (const auto* m : {&before, &after})
    for (const auto& [name, mem] : *m) {
      auto a = before.equal_range(name);
      auto b = after.equal_range(name);
      std::vector<Memory> ma, mb;
      for (auto it = a.first; it != a.second; ++it) ma.push_back(it->second);
      for (auto it = b.first; it != b.second; ++it) mb.push_back(it->second);
      std::sort(ma.begin(), ma.end());
      std::sort(mb.begin(), mb.end());
      if (ma != mb) out.insert(name);
    }
  return out;
}

/// Names whose memory the cause predicates consult for t: subjects under
/// CVY (Cause Ref reads the index set), subjects and objects under BS (both
/// predicates read the first extruder). RPI predicates only pick among
/// recorded extruders, which object causality already tracks.
std::set<std::string> MemoryReads(const Transition& t, SemanticsKind kind) {
  std::set<std::string> out;
  if (kind == SemanticsKind::kRpi) return out;
  const RPtr& where = t.dir == Direction::kForward ? t.target : t.source;
  for (const auto& [ctx, prefix] : FindPast(where, t.label.key)) {
    out.insert(prefix->subject.base);
    if (kind == SemanticsKind::kBs && prefix->kind == RProcess::Kind::kOut) out.insert(prefix->object.base);
  }
  return out;
}

bool Meets(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& n : a)
    if (b.count(n)) return true;
  return false;
}

}  // namespace

bool CauseInterference(const Transition& t1, const Transition& t2, const Engine& engine) {
  return Meets(MemoryWrites(t1), MemoryReads(t2, engine.kind())) ||
         Meets(MemoryWrites(t2), MemoryReads(t1, engine.kind()));
}

TraceCausality AnalyzeTrace(const Trace& trace) {
  TraceCausality out;
  const std::size_t n = trace.size();
  out.closure.assign(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p) {
    out.closure[p][p] = true;
    for (std::size_t q = p + 1; q < n; ++q) {
      CausalVerdict v = Relate(trace[p], trace[q]);
      if (!v.related) continue;
      out.edges.push_back({p, q, v.structural, v.object});
      out.closure[p][q] = true;
    }
  }
  // Edges only go forward in the trace, so one pass in order closes them.
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < q; ++p)
      if (out.closure[p][q])
        for (std::size_t r = 0; r < p; ++r)
          if (out.closure[r][p]) out.closure[r][q] = true;
  return out;
}

std::string_view ToString(Equivalence e) {
  switch (e) {
    case Equivalence::kEquivalent: return "equivalent";
    case Equivalence::kNotEquivalent: return "not-equivalent";
    case Equivalence::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

std::string StepKey(const Transition& t) {
  return std::string(ToString(t.dir)) + " " + t.label.ToString() + " @ " + CanonicalString(t.target);
}

}  // namespace

std::string TraceKey(const Trace& trace) {
  std::string out;
  for (const auto& t : trace) out += StepKey(t) + "\n";
  return out;
}

Equivalence TracesEquivalent(const Trace& s1, const Trace& s2, const Engine& engine,
                             const EquivalenceBudget& budget) {
  if (s1.size() > budget.max_length || s2.size() > budget.max_length) return Equivalence::kBudgetExceeded;
  if (!s1.empty() && !s2.empty() && CanonicalString(s1.front().source) != CanonicalString(s2.front().source))
    return Equivalence::kNotEquivalent;

  // Owner 1 and 2 mark which start trace reached a normal form first.
  std::unordered_map<std::string, int> seen;
  std::deque<std::pair<Trace, int>> queue;
  auto visit = [&](Trace t, int owner) -> bool {
    std::string key = TraceKey(t);
    auto [it, inserted] = seen.emplace(key, owner);
    if (!inserted) return it->second != owner;
    queue.emplace_back(std::move(t), owner);
    return false;
  };
  if (visit(s1, 1) || visit(s2, 2)) return Equivalence::kEquivalent;

  while (!queue.empty()) {
    if (seen.size() > budget.max_states) return Equivalence::kBudgetExceeded;
    auto [trace, owner] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < trace.size(); ++p) {
      const Transition& a = trace[p];
      const Transition& b = trace[p + 1];
      if (IsReverse(a, b)) {
        Trace next;
        next.insert(next.end(), trace.begin(), trace.begin() + p);
        next.insert(next.end(), trace.begin() + p + 2, trace.end());
        if (visit(std::move(next), owner)) return Equivalence::kEquivalent;
        continue;
      }
      if (!Relate(a, b).concurrent) continue;
      auto res = Residual(a, b, engine);
      if (!res) continue;
      Trace next = trace;
      next[p] = res->first;
      next[p + 1] = res->second;
      if (visit(std::move(next), owner)) return Equivalence::kEquivalent;
    }
  }
  return Equivalence::kNotEquivalent;
}

std::optional<std::string> TraceNormalForm(const Trace& trace, const Engine& engine,
                                           const EquivalenceBudget& budget) {
  if (trace.size() > budget.max_length) return std::nullopt;
  std::unordered_set<std::string> seen;
  std::deque<Trace> queue;
  std::pair<std::size_t, std::string> best{trace.size(), TraceKey(trace)};
  seen.insert(best.second);
  queue.push_back(trace);
  auto visit = [&](Trace t) {
    std::string key = TraceKey(t);
    if (!seen.insert(key).second) return;
    best = std::min(best, std::make_pair(t.size(), key));
    queue.push_back(std::move(t));
  };
  while (!queue.empty()) {
    if (seen.size() > budget.max_states) return std::nullopt;
    Trace t = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < t.size(); ++p) {
      if (IsReverse(t[p], t[p + 1])) {
        Trace next;
        next.insert(next.end(), t.begin(), t.begin() + p);
        next.insert(next.end(), t.begin() + p + 2, t.end());
        visit(std::move(next));
        continue;
      }
      if (!Relate(t[p], t[p + 1]).concurrent) continue;
      if (auto res = Residual(t[p], t[p + 1], engine)) {
        Trace next = t;
        next[p] = res->first;
        next[p + 1] = res->second;
        visit(std::move(next));
      }
    }
  }
  return best.second;
}

}  // namespace rpi
