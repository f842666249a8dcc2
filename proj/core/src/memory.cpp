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

#include "rpi/memory.hpp"

#include <sstream>

namespace rpi {

std::string KeyToString(Key k) { return k == kStar ? std::string("*") : std::to_string(k); }

std::string CauseToString(const CauseSet& k) {
  if (k == NoCause()) return "*";
  std::string out = "{";
  bool first = true;
  for (Key key : k) {
    if (!first) out += ",";
    out += KeyToString(key);
    first = false;
  }
  return out + "}";
}

std::string_view ToString(SemanticsKind kind) {
  switch (kind) {
    case SemanticsKind::kRpi: return "rpi";
    case SemanticsKind::kBs: return "bs";
    case SemanticsKind::kCvy: return "cvy";
  }
  return "?";
}

std::optional<SemanticsKind> ParseSemanticsKind(std::string_view text) {
  if (text == "rpi") return SemanticsKind::kRpi;
  if (text == "bs") return SemanticsKind::kBs;
  if (text == "cvy") return SemanticsKind::kCvy;
  return std::nullopt;
}

Memory Memory::Init(SemanticsKind kind) {
  Memory m;
  m.kind = kind;
  if (kind == SemanticsKind::kCvy) m.omega = {kStar};
  return m;
}

bool Memory::Empty() const {
  switch (kind) {
    case SemanticsKind::kRpi: return gamma.empty();
    case SemanticsKind::kBs: return gamma.empty() && w == kStar;
    case SemanticsKind::kCvy: return gamma.empty() && omega == std::set<Key>{kStar};
  }
  return true;
}

Memory Memory::Add(Key i) const {
  Memory m = *this;
  m.gamma.insert(i);
  if (kind == SemanticsKind::kBs && w == kStar) m.w = i;
  if (kind == SemanticsKind::kCvy) m.omega.insert(i);
  return m;
}

Memory Memory::RemoveIndex(Key i) const {
  Memory m = *this;
  if (kind == SemanticsKind::kBs && w == i) m.w = kStar;
  if (kind == SemanticsKind::kCvy) m.omega.erase(i);
  return m;
}

Memory Memory::Pop(Key i) const {
  Memory m = RemoveIndex(i);
  m.gamma.erase(i);
  return m;
}

std::string Memory::ToString() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Key k : gamma) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  os << "}";
  if (kind == SemanticsKind::kBs) os << "_" << KeyToString(w);
  if (kind == SemanticsKind::kCvy) os << "_" << CauseToString(omega);
  return os.str();
}

std::vector<CauseSet> UpdateCandidates(const Memory& m, const CauseSet& k) {
  if (m.kind == SemanticsKind::kBs) {
    CauseSet out = k;
    out.insert(m.w);
    return {out};
  }
  return {k};
}

bool StarCompatible(const CauseSet& k, Key j) {
  return k.count(kStar) != 0 || j == kStar || k == CauseSet{j};
}

}  // namespace rpi
