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

#include "rpi/extrusion.hpp"

namespace rpi {

RPtr RemoveKey(const RPtr& x, Key i) {
  switch (x->kind) {
    case RProcess::Kind::kNil: return x;
    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn:
      // Lifted parts carry only initialised memories.
      if (!x->event) return x;
      return WithCont(x, RemoveKey(x->left, i));
    case RProcess::Kind::kPar: return RPar(RemoveKey(x->left, i), RemoveKey(x->right, i));
    case RProcess::Kind::kNew: return RNew(x->name, x->memory.RemoveIndex(i), RemoveKey(x->left, i));
  }
  return x;
}

namespace {

bool ContainsInstantiated(const RPtr& x, Key inst, Key key) {
  if (x->event && x->event->key == key && x->subject.inst == inst) return true;
  if (x->left && ContainsInstantiated(x->left, inst, key)) return true;
  return x->right && ContainsInstantiated(x->right, inst, key);
}

}  // namespace

bool InstantiationRelated(const RPtr& x, Key i1, Key i2) {
  for (const auto& [ctx, prefix] : FindPast(x, i1)) {
    if (prefix->kind != RProcess::Kind::kIn || prefix->subject.inst != kStar) continue;
    if (ContainsInstantiated(prefix->left, i1, i2)) return true;
  }
  return false;
}

std::vector<CauseSet> CauseCandidates(const Memory& m, const CauseSet& k, const RPtr& x) {
  switch (m.kind) {
    case SemanticsKind::kRpi: {
      std::vector<CauseSet> out;
      if (k == NoCause()) {
        for (Key g : m.gamma) out.push_back({g});
        return out;
      }
      out.push_back(k);
      if (k.size() == 1) {
        Key k0 = *k.begin();
        for (Key g : m.gamma)
          if (g != k0 && InstantiationRelated(x, k0, g)) out.push_back({g});
      }
      return out;
    }
    case SemanticsKind::kBs: {
      CauseSet out = k;
      out.insert(m.w);
      return {out};
    }
    case SemanticsKind::kCvy: {
      CauseSet out = k;
      out.insert(m.omega.begin(), m.omega.end());
      return {out};
    }
  }
  return {};
}

}  // namespace rpi
