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

#include "rpi/verification.hpp"

#include <deque>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "rpi/bs_oracle.hpp"
#include "rpi/pi_oracle.hpp"

namespace rpi {

nlohmann::json CheckReport::ToJson() const {
  nlohmann::json j = {{"property", property}, {"kind", kind},     {"entries", entries},
                      {"states", states},     {"traces", traces}, {"ok", ok},
                      {"budget_exceeded", budget_exceeded}};
  if (!ok) {
    j["entry"] = entry;
    j["counterexample"] = counterexample;
    j["witness"] = witness;
  }
  return j;
}

std::string CheckReport::Summary() const {
  std::ostringstream os;
  os << property << " [" << kind << "]: " << (ok ? "ok" : budget_exceeded ? "BUDGET EXCEEDED" : "FAILED") << ", "
     << entries << " entries, " << states << " states, " << traces << " traces";
  if (!ok) os << "\n  entry " << entry << ": " << counterexample;
  return os.str();
}

namespace {

/// Per-entry outcome, merged into a CheckReport.
struct Partial {
  std::size_t states = 0;
  std::size_t traces = 0;
  bool ok = true;
  bool budget_exceeded = false;
  std::string counterexample;
  std::string witness;
};

/// One step of a witness script.
struct ScriptStep {
  Direction dir;
  std::size_t index;
  std::optional<Key> key;

  std::string ToString() const {
    std::string s = std::string(rpi::ToString(dir)) + " " + std::to_string(index);
    if (key) s += " @" + std::to_string(*key);
    return s;
  }
};

std::string Script(SemanticsKind kind, const std::string& source, const std::vector<ScriptStep>& steps) {
  std::string out = "semantics " + std::string(ToString(kind)) + "\nload " + source + "\n";
  for (const auto& s : steps) out += s.ToString() + "\n";
  return out;
}

int DepthFor(const CorpusEntry& e, const CheckOptions& o) { return o.depth > 0 ? o.depth : e.depth; }

CheckReport RunOverCorpus(const std::string& property, SemanticsKind kind, const Corpus& corpus,
                          const CheckOptions& options, const std::function<Partial(const CorpusEntry&)>& check) {
  std::vector<Partial> parts;
  if (options.parallel) {
    std::vector<std::future<Partial>> futures;
    for (const auto& e : corpus) futures.push_back(std::async(std::launch::async, check, std::cref(e)));
    for (auto& f : futures) parts.push_back(f.get());
  } else {
    for (const auto& e : corpus) parts.push_back(check(e));
  }
  CheckReport r;
  r.property = property;
  r.kind = std::string(ToString(kind));
  for (std::size_t n = 0; n < parts.size(); ++n) {
    const Partial& p = parts[n];
    ++r.entries;
    r.states += p.states;
    r.traces += p.traces;
    if (!p.ok && r.ok) {
      r.ok = false;
      r.budget_exceeded = p.budget_exceeded;
      r.entry = corpus[n].name;
      r.counterexample = p.counterexample;
      r.witness = p.witness;
    }
  }
  return r;
}

struct Node {
  RPtr x;
  std::vector<ScriptStep> path;
};

/// Breadth-first exploration of forward and backward moves; `visit` is
/// called once per state (up to alpha) at distance < depth and returns
/// false to stop.
void Explore(const RPtr& start, const Engine& engine, int depth,
             const std::function<bool(const Node&, const std::vector<Transition>&,
                                      const std::vector<Transition>&)>& visit) {
  std::unordered_set<std::string> seen{CanonicalString(start)};
  std::deque<Node> level{{start, {}}};
  for (int d = 0; d < depth && !level.empty(); ++d) {
    std::deque<Node> next;
    for (const auto& node : level) {
      auto fwd = engine.Forward(node.x);
      auto bwd = engine.Backward(node.x);
      if (!visit(node, fwd, bwd)) return;
      auto push = [&](const std::vector<Transition>& ts, Direction dir) {
        for (std::size_t i = 0; i < ts.size(); ++i) {
          if (!seen.insert(CanonicalString(ts[i].target)).second) continue;
          Node n{ts[i].target, node.path};
          n.path.push_back({dir, i, std::nullopt});
          next.push_back(std::move(n));
        }
      };
      push(fwd, Direction::kForward);
      push(bwd, Direction::kBackward);
    }
    level = std::move(next);
  }
}

}  // namespace

CheckReport CheckLoopLemma(const Corpus& corpus, SemanticsKind kind, const CheckOptions& options) {
  Engine engine(kind, options.fault);
  return RunOverCorpus("loop", kind, corpus, options, [&](const CorpusEntry& e) {
    Partial p;
    Explore(Lift(e.process, kind), engine, DepthFor(e, options), [&](const Node& node, const auto& fwd, const auto& bwd) {
      ++p.states;
      const std::string here = CanonicalString(node.x);
      auto fail = [&](const Transition& t, Direction dir, std::size_t i) {
        p.ok = false;
        p.counterexample = std::string(dir == Direction::kForward ? "no backward step undoing " : "no forward step redoing ") +
                           t.ToString();
        auto path = node.path;
        path.push_back({dir, i, std::nullopt});
        p.witness = Script(kind, ToString(e.process), path);
        return false;
      };
      for (std::size_t i = 0; i < fwd.size(); ++i) {
        ++p.traces;
        bool found = false;
        for (const auto& b : engine.Backward(fwd[i].target))
          found = found || (b.label == fwd[i].label && CanonicalString(b.target) == here);
        if (!found) return fail(fwd[i], Direction::kForward, i);
      }
      for (std::size_t i = 0; i < bwd.size(); ++i) {
        ++p.traces;
        bool found = false;
        for (const auto& f : engine.Forward(bwd[i].target, bwd[i].label.key))
          found = found || (f.label == bwd[i].label && CanonicalString(f.target) == here);
        if (!found) return fail(bwd[i], Direction::kBackward, i);
      }
      return true;
    });
    return p;
  });
}

CheckReport CheckSquareLemma(const Corpus& corpus, SemanticsKind kind, const CheckOptions& options) {
  Engine engine(kind, options.fault);
  return RunOverCorpus("square", kind, corpus, options, [&](const CorpusEntry& e) {
    Partial p;
    Explore(Lift(e.process, kind), engine, DepthFor(e, options), [&](const Node& node, const auto& fwd, const auto& bwd) {
      ++p.states;
      std::vector<std::pair<Transition, ScriptStep>> firsts;
      for (std::size_t i = 0; i < fwd.size(); ++i) firsts.push_back({fwd[i], {Direction::kForward, i, std::nullopt}});
      for (std::size_t i = 0; i < bwd.size(); ++i) firsts.push_back({bwd[i], {Direction::kBackward, i, std::nullopt}});
      for (const auto& [t1, s1] : firsts) {
        Key k = 1;
        while (Occurs(k, node.x) || Occurs(k, t1.target)) ++k;
        std::vector<std::pair<Transition, ScriptStep>> seconds;
        auto f2 = engine.Forward(t1.target, k);
        auto b2 = engine.Backward(t1.target);
        for (std::size_t i = 0; i < f2.size(); ++i) seconds.push_back({f2[i], {Direction::kForward, i, k}});
        for (std::size_t i = 0; i < b2.size(); ++i) seconds.push_back({b2[i], {Direction::kBackward, i, std::nullopt}});
        for (const auto& [t2, s2] : seconds) {
          if (IsReverse(t1, t2)) continue;
          if (!(options.literal_concurrency ? Relate(t1, t2) : Relate(t1, t2, engine)).concurrent) continue;
          ++p.traces;
          if (Residual(t1, t2, engine)) continue;
          p.ok = false;
          p.counterexample = "no residual for " + t1.label.ToString() + " ; " + t2.label.ToString() + " from " +
                             ToString(node.x);
          auto path = node.path;
          path.push_back(s1);
          path.push_back(s2);
          p.witness = Script(kind, ToString(e.process), path);
          return false;
        }
      }
      return true;
    });
    return p;
  });
}

CheckReport CheckCausalConsistency(const Corpus& corpus, SemanticsKind kind, const CheckOptions& options) {
  Engine engine(kind, options.fault);
  return RunOverCorpus("consistency", kind, corpus, options, [&](const CorpusEntry& e) {
    Partial p;
    const int depth = DepthFor(e, options);
    struct Item {
      std::vector<ScriptStep> script;
      std::string endpoint;
      std::string normal;
    };
    std::vector<Item> items;
    Trace trace;
    std::vector<ScriptStep> script;
    std::set<Key> used;

    std::function<void(const RPtr&)> walk = [&](const RPtr& x) {
      if (!p.ok) return;
      auto nf = TraceNormalForm(trace, engine, options.budget);
      if (!nf) {
        p.ok = false;
        p.budget_exceeded = true;
        p.counterexample = "rewriting budget exceeded";
        p.witness = Script(kind, ToString(e.process), script);
        return;
      }
      items.push_back({script, CanonicalString(x), *nf});
      ++p.traces;
      if (static_cast<int>(trace.size()) == depth) return;
      auto step = [&](const Transition& t, ScriptStep s) {
        bool fresh = used.insert(t.label.key).second;
        trace.push_back(t);
        script.push_back(s);
        walk(t.target);
        trace.pop_back();
        script.pop_back();
        if (fresh) used.erase(t.label.key);
      };
      for (Key k = 1; k <= static_cast<Key>(depth); ++k) {
        if (used.count(k)) continue;
        auto fwd = engine.Forward(x, k);
        for (std::size_t i = 0; i < fwd.size(); ++i) step(fwd[i], {Direction::kForward, i, k});
      }
      auto bwd = engine.Backward(x);
      for (std::size_t i = 0; i < bwd.size(); ++i) step(bwd[i], {Direction::kBackward, i, std::nullopt});
    };
    walk(Lift(e.process, kind));
    if (!p.ok) return p;

    // Cofinal <=> same permutation class, both directions.
    std::map<std::string, const Item*> by_endpoint, by_normal;
    std::unordered_set<std::string> states;
    for (const auto& item : items) {
      states.insert(item.endpoint);
      auto [ie, fresh_e] = by_endpoint.emplace(item.endpoint, &item);
      auto [in, fresh_n] = by_normal.emplace(item.normal, &item);
      const Item* other = nullptr;
      std::string what;
      if (!fresh_e && ie->second->normal != item.normal) {
        other = ie->second;
        what = "coinitial and cofinal traces that are not equivalent";
      } else if (!fresh_n && in->second->endpoint != item.endpoint) {
        other = in->second;
        what = "equivalent traces with different endpoints";
      }
      if (!other) continue;
      p.ok = false;
      p.counterexample = what;
      p.witness = Script(kind, ToString(e.process), other->script) + "---\n" + Script(kind, ToString(e.process), item.script);
      break;
    }
    p.states = states.size();
    return p;
  });
}

CheckReport CheckBisim(const Corpus& corpus, SemanticsKind kind, const CheckOptions& options) {
  Engine engine(kind, options.fault);
  return RunOverCorpus("bisim", kind, corpus, options, [&](const CorpusEntry& e) {
    Partial p;
    BisimResult r = CheckForwardBisim(Lift(e.process, kind), engine, DepthFor(e, options));
    p.states = r.states;
    p.ok = r.ok;
    p.counterexample = r.counterexample;
    if (!r.ok) p.witness = Script(kind, ToString(e.process), {});
    return p;
  });
}

CheckReport CheckBsCorrespondence(const Corpus& corpus, const CheckOptions& options) {
  return RunOverCorpus("bs-corr", SemanticsKind::kBs, corpus, options, [&](const CorpusEntry& e) {
    Partial p;
    const int depth = DepthFor(e, options);
    for (auto* check : {&CheckStructuralCorrespondence, &CheckCausalCorrespondence}) {
      CorrespondenceResult r = check(e.process, depth, {});
      p.traces += r.traces;
      if (!r.ok) {
        p.ok = false;
        p.budget_exceeded = r.budget_exceeded;
        p.counterexample = r.mismatch;
        p.witness = Script(SemanticsKind::kBs, ToString(e.process), {});
        break;
      }
    }
    return p;
  });
}

}  // namespace rpi
