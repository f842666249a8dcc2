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

#include "rpi/pi_oracle.hpp"

#include <deque>
#include <unordered_set>

namespace rpi {

namespace {

std::set<std::string> Union(std::set<std::string> a, const std::set<std::string>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

/// Renames the bound object of a bound-output step away from `avoid`.
PiStep RenameExtruded(PiStep s, const std::set<std::string>& avoid) {
  const std::string& a = s.label.object;
  std::string z = FreshName(a, Union(Union(avoid, AllNames(s.target)), {a}));
  s.target = Substitute(s.target, a, z);
  s.label.object = z;
  return s;
}

PiStep InPar(const PiStep& s, const ProcessPtr& other, bool left) {
  auto wrap = [other, left](ProcessPtr p) { return left ? Par(std::move(p), other) : Par(other, std::move(p)); };
  PiStep out{s.label, wrap(s.target), nullptr};
  if (s.instantiate) {
    auto inst = s.instantiate;
    out.instantiate = [inst, wrap](const std::string& a) { return wrap(inst(a)); };
  }
  return out;
}

void Synchronise(const PiStep& snd, const PiStep& rcv, const ProcessPtr& rcv_proc, bool out_left,
                 std::vector<PiStep>& out) {
  if (snd.label.subject != rcv.label.subject) return;
  auto pair = [out_left](ProcessPtr s, ProcessPtr r) { return out_left ? Par(std::move(s), std::move(r)) : Par(std::move(r), std::move(s)); };
  if (snd.label.kind == PiLabel::Kind::kOut) {
    // Com
    out.push_back({PiLabel{}, pair(snd.target, rcv.instantiate(snd.label.object)), nullptr});
  } else if (snd.label.kind == PiLabel::Kind::kBoundOut) {
    // Close, after moving the extruded name away from the receiver's names.
    PiStep s = FreeNames(rcv_proc).count(snd.label.object) ? RenameExtruded(snd, AllNames(rcv_proc)) : snd;
    out.push_back({PiLabel{}, New(s.label.object, pair(s.target, rcv.instantiate(s.label.object))), nullptr});
  }
}

}  // namespace

std::vector<PiStep> PiSteps(const ProcessPtr& p) {
  std::vector<PiStep> out;
  switch (p->kind) {
    case Process::Kind::kNil: break;

    case Process::Kind::kOut:
      out.push_back({PiLabel{PiLabel::Kind::kOut, p->subject, p->object}, p->left, nullptr});
      break;

    case Process::Kind::kIn: {
      ProcessPtr cont = p->left;
      std::string x = p->object;
      out.push_back({PiLabel{PiLabel::Kind::kIn, p->subject, x}, cont,
                     [cont, x](const std::string& a) { return Substitute(cont, x, a); }});
      break;
    }

    case Process::Kind::kPar: {
      auto left = PiSteps(p->left);
      auto right = PiSteps(p->right);
      // Par: a bound output must not capture free names of the other side.
      for (const auto& s : left) {
        bool clash = s.label.kind == PiLabel::Kind::kBoundOut && FreeNames(p->right).count(s.label.object);
        out.push_back(InPar(clash ? RenameExtruded(s, AllNames(p->right)) : s, p->right, true));
      }
      for (const auto& s : right) {
        bool clash = s.label.kind == PiLabel::Kind::kBoundOut && FreeNames(p->left).count(s.label.object);
        out.push_back(InPar(clash ? RenameExtruded(s, AllNames(p->left)) : s, p->left, false));
      }
      for (const auto& l : left)
        for (const auto& r : right) {
          if (r.label.kind == PiLabel::Kind::kIn) Synchronise(l, r, p->right, true, out);
          if (l.label.kind == PiLabel::Kind::kIn) Synchronise(r, l, p->left, false, out);
        }
      break;
    }

    case Process::Kind::kNew: {
      const std::string& a = p->object;
      for (auto& s : PiSteps(p->left)) {
        const PiLabel& l = s.label;
        if (l.kind != PiLabel::Kind::kTau && l.subject == a) continue;
        if (l.kind == PiLabel::Kind::kOut && l.object == a) {
          // Open
          out.push_back({PiLabel{PiLabel::Kind::kBoundOut, l.subject, a}, s.target, nullptr});
          continue;
        }
        PiStep step = s;
        if (l.kind == PiLabel::Kind::kBoundOut && l.object == a) step = RenameExtruded(s, {a});
        // Res
        PiStep res{step.label, New(a, step.target), nullptr};
        if (step.instantiate) {
          auto inst = step.instantiate;
          ProcessPtr body = p->left;
          res.instantiate = [inst, a, body](const std::string& c) {
            if (c != a) return New(a, inst(c));
            // The received name would be captured: rename the restriction.
            auto avoid = Union(AllNames(body), {a});
            std::string z0 = FreshName("r", avoid);
            avoid.insert(z0);
            std::string z = FreshName(a, avoid);
            ProcessPtr q = Substitute(Substitute(inst(z0), a, z), z0, c);
            return New(z, q);
          };
        }
        out.push_back(std::move(res));
      }
      break;
    }
  }
  return out;
}

namespace {

bool Matches(const Transition& t, const PiStep& s, const ProcessPtr& source) {
  PiLabel l = EraseLabel(t.label);
  if (l.kind != s.label.kind || l.subject != s.label.subject) return false;
  ProcessPtr fw = Erase(t.target);
  switch (l.kind) {
    case PiLabel::Kind::kTau: return AlphaEqual(fw, s.target);
    case PiLabel::Kind::kOut: return l.object == s.label.object && AlphaEqual(fw, s.target);
    case PiLabel::Kind::kIn:
    case PiLabel::Kind::kBoundOut: {
      auto avoid = Union(Union(AllNames(source), AllNames(fw)), AllNames(s.target));
      std::string z = FreshName("z", avoid);
      ProcessPtr pi = l.kind == PiLabel::Kind::kIn ? s.instantiate(z) : Substitute(s.target, s.label.object, z);
      return AlphaEqual(Substitute(fw, l.object, z), pi);
    }
  }
  return false;
}

}  // namespace

BisimResult CheckForwardBisim(const RPtr& x, const Engine& engine, int depth) {
  BisimResult result;
  std::unordered_set<std::string> seen{CanonicalString(x)};
  std::deque<std::pair<RPtr, int>> queue{{x, 0}};
  while (!queue.empty()) {
    auto [state, d] = queue.front();
    queue.pop_front();
    if (d >= depth) continue;
    ++result.states;
    ProcessPtr p = Erase(state);
    auto forward = engine.Forward(state);
    auto pi = PiSteps(p);
    for (const auto& t : forward) {
      bool found = false;
      for (const auto& s : pi) found = found || Matches(t, s, p);
      if (!found) {
        result.ok = false;
        result.counterexample = "unmatched forward step " + t.ToString();
        return result;
      }
      if (seen.insert(CanonicalString(t.target)).second) queue.emplace_back(t.target, d + 1);
    }
    for (const auto& s : pi) {
      bool found = false;
      for (const auto& t : forward) found = found || Matches(t, s, p);
      if (!found) {
        result.ok = false;
        result.counterexample = "unmatched pi step of " + ToString(p) + ": " + s.label.ToString() + " -> " +
                                ToString(s.target) + " (state " + ToString(state) + ")";
        return result;
      }
    }
  }
  return result;
}

}  // namespace rpi
