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

#ifndef RPI_MEMORY_HPP_
#define RPI_MEMORY_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rpi {

/// Event keys. Key 0 is reserved for the special key `*`, so a `Key` value
/// doubles as an element of K* = K u {*}.
using Key = std::uint32_t;
inline constexpr Key kStar = 0;

/// Contextual cause set, a subset of K*. Never empty in a well-formed term:
/// "no cause" is {*}.
using CauseSet = std::set<Key>;

inline CauseSet NoCause() { return CauseSet{kStar}; }

std::string KeyToString(Key k);
std::string CauseToString(const CauseSet& k);

/// Selects one of the three extrusion memories, and with it the causal
/// semantics of the whole process.
enum class SemanticsKind {
  kRpi,  // plain set
  kBs,   // set indexed with the first extruder
  kCvy,  // set indexed with a set of live extruders
};

std::string_view ToString(SemanticsKind kind);
std::optional<SemanticsKind> ParseSemanticsKind(std::string_view text);
inline constexpr SemanticsKind kAllKinds[] = {SemanticsKind::kRpi, SemanticsKind::kBs,
                                              SemanticsKind::kCvy};

/**
 * Extrusion memory attached to a restriction.
 *
 * `gamma` holds every extruder key. For kBs, `w` is the index (first
 * extruder, or kStar). For kCvy, `omega` is the index set; it starts as {*}
 * and loses keys only through RemoveIndex.
 */
struct Memory {
  SemanticsKind kind = SemanticsKind::kRpi;
  std::set<Key> gamma;
  Key w = kStar;
  std::set<Key> omega;

  static Memory Init(SemanticsKind kind);

  bool Empty() const;
  bool Contains(Key i) const { return gamma.count(i) != 0; }

  /// The `+i` operation.
  Memory Add(Key i) const;

  /// The per-restriction effect of `#i`: drop `i` from the index only.
  Memory RemoveIndex(Key i) const;

  /// Inverse of Add as used by the backward Open rule: removes `i` from
  /// gamma and from the index. Pop(Add(m, i), i) == m whenever i is not in m,
  /// and also Pop(RemoveIndex(Add(m, i), i), i) == m.
  Memory Pop(Key i) const;

  std::string ToString() const;

  friend bool operator==(const Memory&, const Memory&) = default;
  friend auto operator<=>(const Memory&, const Memory&) = default;
};

/// Candidate causes produced by the Open rule's update predicate, evaluated
/// against the memory before the opening key is added.
std::vector<CauseSet> UpdateCandidates(const Memory& m, const CauseSet& k);

/// The `=*` side condition of Com/Close: `*` in k, or j is `*`, or k == {j}.
bool StarCompatible(const CauseSet& k, Key j);

}  // namespace rpi

#endif  // RPI_MEMORY_HPP_
