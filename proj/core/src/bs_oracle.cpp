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

#include "rpi/bs_oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include "rpi/causality.hpp"

namespace rpi {

namespace {

CPtr Make(CausalTerm t) { return std::make_shared<const CausalTerm>(std::move(t)); }

CPtr Plain(ProcessPtr p) {
  CausalTerm t;
  t.process = std::move(p);
  return Make(std::move(t));
}

CPtr CPar(CPtr l, CPtr r) {
  CausalTerm t;
  t.kind = CausalTerm::Kind::kPar;
  t.left = std::move(l);
  t.right = std::move(r);
  return Make(std::move(t));
}

CPtr CRestrict(std::string name, CPtr body) {
  CausalTerm t;
  t.kind = CausalTerm::Kind::kRestrict;
  t.name = std::move(name);
  t.left = std::move(body);
  return Make(std::move(t));
}

std::set<std::string> Union(std::set<std::string> a, const std::set<std::string>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

CPtr CSubstitute(const CPtr& a, const std::string& var, const std::string& c) {
  if (var == c) return a;
  switch (a->kind) {
    case CausalTerm::Kind::kPlain: return Plain(Substitute(a->process, var, c));
    case CausalTerm::Kind::kCause: return CauseWrap(a->causes, CSubstitute(a->left, var, c));
    case CausalTerm::Kind::kPar: return CPar(CSubstitute(a->left, var, c), CSubstitute(a->right, var, c));
    case CausalTerm::Kind::kRestrict: {
      if (a->name == var) return a;
      std::string n = a->name;
      CPtr body = a->left;
      if (n == c && FreeNames(Lambda(body)).count(var) != 0) {
        std::string z = FreshName(n, Union(AllNames(Lambda(body)), {var, c}));
        body = CSubstitute(body, n, z);
        n = z;
      }
      return CRestrict(n, CSubstitute(body, var, c));
    }
  }
  return a;
}

/// Replaces key k by `with` in every cause wrapper of a.
CPtr ReplaceCause(const CPtr& a, Key k, const std::set<Key>& with) {
  switch (a->kind) {
    case CausalTerm::Kind::kPlain: return a;
    case CausalTerm::Kind::kCause: {
      std::set<Key> causes = a->causes;
      if (causes.erase(k)) causes.insert(with.begin(), with.end());
      return CauseWrap(std::move(causes), ReplaceCause(a->left, k, with));
    }
    case CausalTerm::Kind::kPar: return CPar(ReplaceCause(a->left, k, with), ReplaceCause(a->right, k, with));
    case CausalTerm::Kind::kRestrict: return CRestrict(a->name, ReplaceCause(a->left, k, with));
  }
  return a;
}

BSStep RenameExtruded(BSStep s, const std::set<std::string>& avoid) {
  const std::string& a = s.label.action.object;
  std::string z = FreshName(a, Union(Union(avoid, AllNames(Lambda(s.target))), {a}));
  s.target = CSubstitute(s.target, a, z);
  s.label.action.object = z;
  return s;
}

BSStep Wrap(const BSStep& s, const std::function<CPtr(CPtr)>& wrap) {
  BSStep out{s.label, wrap(s.target), nullptr};
  if (s.instantiate) {
    auto inst = s.instantiate;
    out.instantiate = [inst, wrap](const std::string& c) { return wrap(inst(c)); };
  }
  return out;
}

void Synchronise(const BSStep& snd, const BSStep& rcv, const CPtr& rcv_term, bool out_left, Key k,
                 std::vector<BSStep>& out) {
  if (snd.label.action.subject != rcv.label.action.subject) return;
  if (snd.label.action.kind != PiLabel::Kind::kOut && snd.label.action.kind != PiLabel::Kind::kBoundOut) return;
  BSStep s = snd;
  bool close = s.label.action.kind == PiLabel::Kind::kBoundOut;
  if (close && FreeNames(Lambda(rcv_term)).count(s.label.action.object))
    s = RenameExtruded(s, AllNames(Lambda(rcv_term)));
  // Each residual inherits the causes of the other participant.
  CPtr sent = ReplaceCause(s.target, k, rcv.label.causes);
  CPtr received = ReplaceCause(rcv.instantiate(s.label.action.object), k, s.label.causes);
  CPtr body = out_left ? CPar(sent, received) : CPar(received, sent);
  if (close) body = CRestrict(s.label.action.object, body);
  out.push_back({BSLabel{}, body, nullptr});
}

}  // namespace

CPtr FromProcess(const ProcessPtr& p) {
  switch (p->kind) {
    case Process::Kind::kPar: return CPar(FromProcess(p->left), FromProcess(p->right));
    case Process::Kind::kNew: return CRestrict(p->object, FromProcess(p->left));
    default: return Plain(p);
  }
}

CPtr CauseWrap(std::set<Key> causes, CPtr body) {
  CausalTerm t;
  t.kind = CausalTerm::Kind::kCause;
  t.causes = std::move(causes);
  t.left = std::move(body);
  return Make(std::move(t));
}

std::string ToString(const CPtr& a) {
  auto keys = [](const std::set<Key>& s) {
    std::string out = "{";
    for (Key k : s) out += (out.size() > 1 ? "," : "") + std::to_string(k);
    return out + "}";
  };
  switch (a->kind) {
    case CausalTerm::Kind::kPlain: {
      std::string s = ToString(a->process);
      return a->process->kind == Process::Kind::kNil ? s : "(" + s + ")";
    }
    case CausalTerm::Kind::kCause: return keys(a->causes) + "::" + ToString(a->left);
    case CausalTerm::Kind::kPar: return "(" + ToString(a->left) + " | " + ToString(a->right) + ")";
    case CausalTerm::Kind::kRestrict: return "new " + a->name + "." + ToString(a->left);
  }
  return "?";
}

ProcessPtr Lambda(const CPtr& a) {
  switch (a->kind) {
    case CausalTerm::Kind::kPlain: return a->process;
    case CausalTerm::Kind::kCause: return Lambda(a->left);
    case CausalTerm::Kind::kPar: return Par(Lambda(a->left), Lambda(a->right));
    case CausalTerm::Kind::kRestrict: return New(a->name, Lambda(a->left));
  }
  return Nil();
}

std::string BSLabel::ToString() const {
  if (action.kind == PiLabel::Kind::kTau) return "tau";
  std::string ks = "{";
  for (Key k : causes) ks += (ks.size() > 1 ? "," : "") + std::to_string(k);
  return ks + "};" + std::to_string(key) + ":" + action.ToString();
}

std::vector<BSStep> BSSteps(const CPtr& a, Key k) {
  std::vector<BSStep> out;
  switch (a->kind) {
    case CausalTerm::Kind::kPlain: {
      const ProcessPtr& p = a->process;
      if (p->kind == Process::Kind::kOut) {
        out.push_back({BSLabel{{}, k, PiLabel{PiLabel::Kind::kOut, p->subject, p->object}},
                       CauseWrap({k}, FromProcess(p->left)), nullptr});
      } else if (p->kind == Process::Kind::kIn) {
        ProcessPtr cont = p->left;
        std::string x = p->object;
        out.push_back({BSLabel{{}, k, PiLabel{PiLabel::Kind::kIn, p->subject, x}}, CauseWrap({k}, FromProcess(cont)),
                       [cont, x, k](const std::string& c) { return CauseWrap({k}, FromProcess(Substitute(cont, x, c))); }});
      }
      break;
    }

    case CausalTerm::Kind::kCause: {
      std::set<Key> causes = a->causes;
      for (auto& s : BSSteps(a->left, k)) {
        BSStep w = Wrap(s, [causes](CPtr t) { return CauseWrap(causes, std::move(t)); });
        if (w.label.action.kind != PiLabel::Kind::kTau) w.label.causes.insert(causes.begin(), causes.end());
        out.push_back(std::move(w));
      }
      break;
    }

    case CausalTerm::Kind::kPar: {
      auto left = BSSteps(a->left, k);
      auto right = BSSteps(a->right, k);
      CPtr l = a->left, r = a->right;
      for (const auto& s : left) {
        bool clash = s.label.action.kind == PiLabel::Kind::kBoundOut && FreeNames(Lambda(r)).count(s.label.action.object);
        out.push_back(Wrap(clash ? RenameExtruded(s, AllNames(Lambda(r))) : s, [r](CPtr t) { return CPar(std::move(t), r); }));
      }
      for (const auto& s : right) {
        bool clash = s.label.action.kind == PiLabel::Kind::kBoundOut && FreeNames(Lambda(l)).count(s.label.action.object);
        out.push_back(Wrap(clash ? RenameExtruded(s, AllNames(Lambda(l))) : s, [l](CPtr t) { return CPar(l, std::move(t)); }));
      }
      for (const auto& ls : left)
        for (const auto& rs : right) {
          if (rs.label.action.kind == PiLabel::Kind::kIn) Synchronise(ls, rs, r, true, k, out);
          if (ls.label.action.kind == PiLabel::Kind::kIn) Synchronise(rs, ls, l, false, k, out);
        }
      break;
    }

    case CausalTerm::Kind::kRestrict: {
      const std::string n = a->name;
      CPtr body = a->left;
      for (auto& s : BSSteps(body, k)) {
        const PiLabel& l = s.label.action;
        if (l.kind != PiLabel::Kind::kTau && l.subject == n) continue;
        if (l.kind == PiLabel::Kind::kOut && l.object == n) {
          BSStep open = s;
          open.label.action.kind = PiLabel::Kind::kBoundOut;
          out.push_back(std::move(open));
          continue;
        }
        BSStep step = l.kind == PiLabel::Kind::kBoundOut && l.object == n ? RenameExtruded(s, {n}) : s;
        BSStep res{step.label, CRestrict(n, step.target), nullptr};
        if (step.instantiate) {
          auto inst = step.instantiate;
          res.instantiate = [inst, n, body](const std::string& c) {
            if (c != n) return CRestrict(n, inst(c));
            auto avoid = Union(AllNames(Lambda(body)), {n});
            std::string z0 = FreshName("r", avoid);
            avoid.insert(z0);
            std::string z = FreshName(n, avoid);
            return CRestrict(z, CSubstitute(CSubstitute(inst(z0), n, z), z0, c));
          };
        }
        out.push_back(std::move(res));
      }
      break;
    }
  }
  return out;
}

BSLabel Gamma(const Label& label) {
  BSLabel out;
  out.action = EraseLabel(label);
  if (out.action.kind != PiLabel::Kind::kTau) out.key = label.key;
  return out;
}

// ---- dependency graph ----

namespace {

void CollectVertices(const RPtr& x, std::optional<std::size_t> parent, DependencyGraph& g) {
  switch (x->kind) {
    case RProcess::Kind::kNil: return;
    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn: {
      if (!x->event) return;
      std::size_t v = g.vertices.size();
      g.vertices.push_back(x->event->key);
      if (parent) g.edges.insert({*parent, v});
      CollectVertices(x->left, v, g);
      return;
    }
    case RProcess::Kind::kPar:
      CollectVertices(x->left, parent, g);
      CollectVertices(x->right, parent, g);
      return;
    case RProcess::Kind::kNew: CollectVertices(x->left, parent, g); return;
  }
}

std::vector<bool> Ancestors(const DependencyGraph& g, Key i) {
  std::vector<bool> reach(g.vertices.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v] == i) {
      reach[v] = true;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& [from, to] : g.edges)
      if (to == v && !reach[from]) {
        reach[from] = true;
        stack.push_back(from);
      }
  }
  return reach;
}

}  // namespace

DependencyGraph BuildDependencyGraph(const RPtr& x) {
  DependencyGraph g;
  CollectVertices(x, std::nullopt, g);
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v)
      if (g.vertices[u] == g.vertices[v]) {
        g.edges.insert({u, v});
        g.edges.insert({v, u});
      }
  return g;
}

std::string DependencyGraph::ToString() const {
  std::map<Key, int> count;
  for (Key k : vertices) ++count[k];
  std::ostringstream os;
  for (const auto& [k, n] : count) os << "vertex " << k << (n > 1 ? " x" + std::to_string(n) : "") << "\n";
  for (const auto& [u, v] : edges) os << vertices[u] << " -> " << vertices[v] << "\n";
  return os.str();
}

std::multiset<Key> StructuralCauses(const DependencyGraph& g, Key i) {
  std::multiset<Key> out;
  auto reach = Ancestors(g, i);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (reach[v] && g.vertices[v] != i) out.insert(g.vertices[v]);
  return out;
}

std::set<Key> Rem(const DependencyGraph& g, Key i, bool contract) {
  auto reach = Ancestors(g, i);
  std::set<Key> out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!reach[v] || g.vertices[v] == i) continue;
    bool paired = false;
    for (std::size_t u = 0; contract && u < g.vertices.size(); ++u)
      paired = paired || (u != v && reach[u] && g.edges.count({u, v}) && g.edges.count({v, u}));
    if (!paired) out.insert(g.vertices[v]);
  }
  return out;
}

// ---- correspondence checks ----

namespace {

bool Visible(const Label& l) { return l.action.kind != Action::Kind::kTau; }

/// The BS residual matching framework step t, renamed to the framework's
/// binder names, or null.
CPtr MatchStep(const Transition& t, const BSStep& s, const std::set<Key>& rem) {
  BSLabel g = Gamma(t.label);
  const PiLabel& bl = s.label.action;
  if (g.action.kind != bl.kind) return nullptr;
  CPtr target = s.target;
  if (bl.kind != PiLabel::Kind::kTau) {
    if (s.label.key != g.key || bl.subject != g.action.subject || s.label.causes != rem) return nullptr;
    if (bl.kind == PiLabel::Kind::kOut && bl.object != g.action.object) return nullptr;
    if (bl.kind == PiLabel::Kind::kIn) target = s.instantiate(g.action.object);
    if (bl.kind == PiLabel::Kind::kBoundOut) target = CSubstitute(s.target, bl.object, g.action.object);
  }
  return AlphaEqual(Lambda(target), Erase(t.target)) ? target : nullptr;
}

std::set<Key> RemFor(const Transition& t, bool contract) {
  if (!Visible(t.label)) return {};
  return Rem(BuildDependencyGraph(t.target), t.label.key, contract);
}

struct Search {
  Engine engine{SemanticsKind::kBs};
  CorrespondenceOptions options;
  int depth = 0;
  std::size_t states = 0;
  CorrespondenceResult result;

  bool Budget() {
    if (++states <= options.max_states) return true;
    result.ok = false;
    result.budget_exceeded = true;
    result.mismatch = "state budget exceeded";
    return false;
  }

  // Framework traces must be matched by BS traces.
  void Framework(const RPtr& x, const std::vector<CPtr>& bs, int n, const std::string& path) {
    if (!result.ok) return;
    auto steps = n < depth ? engine.Forward(x, n + 1) : std::vector<Transition>{};
    if (steps.empty()) {
      ++result.traces;
      return;
    }
    for (const auto& t : steps) {
      if (!Budget()) return;
      std::set<Key> rem = RemFor(t, options.contract);
      std::vector<CPtr> next;
      std::unordered_set<std::string> seen;
      for (const auto& a : bs)
        for (const auto& s : BSSteps(a, n + 1))
          if (CPtr m = MatchStep(t, s, rem); m && seen.insert(ToString(m)).second) next.push_back(m);
      std::string here = path + " ; " + t.label.ToString();
      if (next.empty()) {
        result.ok = false;
        result.mismatch = "framework trace without BS counterpart:" + here + " (Rem = " + CauseToString(rem) + ")";
        return;
      }
      Framework(t.target, next, n + 1, here);
      if (!result.ok) return;
    }
  }

  // BS traces must be matched by framework traces.
  void Bs(const CPtr& a, const std::vector<RPtr>& xs, int n, const std::string& path) {
    if (!result.ok) return;
    auto steps = n < depth ? BSSteps(a, n + 1) : std::vector<BSStep>{};
    if (steps.empty()) {
      ++result.traces;
      return;
    }
    for (const auto& s : steps) {
      if (!Budget()) return;
      std::vector<RPtr> next;
      std::unordered_set<std::string> seen;
      for (const auto& x : xs)
        for (const auto& t : engine.Forward(x, n + 1))
          if (MatchStep(t, s, RemFor(t, options.contract)) && seen.insert(CanonicalString(t.target)).second)
            next.push_back(t.target);
      std::string here = path + " ; " + s.label.ToString();
      if (next.empty()) {
        result.ok = false;
        result.mismatch = "BS trace without framework counterpart:" + here;
        return;
      }
      Bs(s.target, next, n + 1, here);
      if (!result.ok) return;
    }
  }

  // Causality on one framework trace and its matched BS trace.
  void Causal(const RPtr& x, const CPtr& a, Trace& trace, std::vector<BSLabel>& labels) {
    if (!result.ok) return;
    int n = static_cast<int>(trace.size());
    auto steps = n < depth ? engine.Forward(x, n + 1) : std::vector<Transition>{};
    if (steps.empty()) {
      ++result.traces;
      CompareCausality(trace, labels);
      return;
    }
    for (const auto& t : steps) {
      if (!Budget()) return;
      std::set<Key> rem = RemFor(t, options.contract);
      CPtr matched;
      BSLabel label;
      for (const auto& s : BSSteps(a, n + 1))
        if (CPtr m = MatchStep(t, s, rem)) {
          matched = m;
          label = s.label;
          break;
        }
      if (!matched) {
        result.ok = false;
        result.mismatch = "no BS step for " + t.ToString();
        return;
      }
      trace.push_back(t);
      labels.push_back(label);
      Causal(t.target, matched, trace, labels);
      trace.pop_back();
      labels.pop_back();
      if (!result.ok) return;
    }
  }

  void CompareCausality(const Trace& trace, const std::vector<BSLabel>& labels) {
    const std::size_t n = trace.size();
    auto framework = AnalyzeTrace(trace).closure;
    std::vector<std::vector<bool>> bs(n, std::vector<bool>(n, false));
    for (std::size_t q = 0; q < n; ++q) {
      bs[q][q] = true;
      const PiLabel& lq = labels[q].action;
      if (lq.kind == PiLabel::Kind::kTau) continue;
      for (std::size_t p = 0; p < q; ++p) {
        const PiLabel& lp = labels[p].action;
        if (lp.kind == PiLabel::Kind::kTau) continue;
        bool subject = labels[q].causes.count(labels[p].key) != 0;
        bool uses = lq.subject == lp.object || (lq.kind != PiLabel::Kind::kIn && lq.object == lp.object);
        bool object = lp.kind == PiLabel::Kind::kBoundOut && uses;
        bs[p][q] = subject || object;
      }
    }
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t p = 0; p < q; ++p)
        if (bs[p][q])
          for (std::size_t r = 0; r < p; ++r)
            if (bs[r][p]) bs[r][q] = true;
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t p = 0; p < q; ++p) {
        if (!Visible(trace[p].label) || !Visible(trace[q].label)) continue;
        if (framework[p][q] == bs[p][q]) continue;
        result.ok = false;
        std::string path;
        for (const auto& t : trace) path += " ; " + t.label.ToString();
        result.mismatch = "causality differs on steps " + std::to_string(p + 1) + " and " + std::to_string(q + 1) +
                          " (framework " + (framework[p][q] ? "related" : "concurrent") + "):" + path;
        return;
      }
  }
};

}  // namespace

CorrespondenceResult CheckStructuralCorrespondence(const ProcessPtr& p, int depth,
                                                   const CorrespondenceOptions& options) {
  Search search;
  search.options = options;
  search.depth = depth;
  RPtr x = Lift(p, SemanticsKind::kBs);
  search.Framework(x, {FromProcess(p)}, 0, "");
  if (search.result.ok) search.Bs(FromProcess(p), {x}, 0, "");
  return search.result;
}

CorrespondenceResult CheckCausalCorrespondence(const ProcessPtr& p, int depth, const CorrespondenceOptions& options) {
  Search search;
  search.options = options;
  search.depth = depth;
  Trace trace;
  std::vector<BSLabel> labels;
  search.Causal(Lift(p, SemanticsKind::kBs), FromProcess(p), trace, labels);
  return search.result;
}

}  // namespace rpi
