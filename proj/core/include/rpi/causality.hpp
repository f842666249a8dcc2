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

#ifndef RPI_CAUSALITY_HPP_
#define RPI_CAUSALITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpi/semantics.hpp"

namespace rpi {

using Trace = std::vector<Transition>;

/// i1 <_x i2: the event keyed i2 sits in the continuation of a past prefix
/// keyed i1.
bool StructuralCauseKeys(Key i1, Key i2, const RPtr& x);

/// True when t2 is the reverse of t1 (same label, swapped endpoints up to
/// alpha, opposite direction).
bool IsReverse(const Transition& t1, const Transition& t2);

/// t1 is a direct structural cause of t2 (t1 earlier in a trace). Two
/// transitions that fire or undo the same prefix position also count, so
/// that an undone prefix and its later re-execution are ordered.
bool StructuralCause(const Transition& t1, const Transition& t2);

/// t1 is a direct object cause of t2: i1 in K2 or i2 in K1, and t1 is not
/// the reverse of t2.
bool ObjectCause(const Transition& t1, const Transition& t2);

/**
 * Cause interference: one transition changes the memory of a restricted
 * name whose memory the cause predicates of the other transition consult.
 * Such pairs are not related by structural or object causality, yet
 * permuting them changes a contextual cause, so they do not commute up to
 * label equivalence.
 */
bool CauseInterference(const Transition& t1, const Transition& t2, const Engine& engine);

struct CausalVerdict {
  bool structural = false;
  bool object = false;
  bool interference = false;
  bool related = false;
  bool concurrent = true;
};

/// Direct relation between two transitions of one trace, t1 first:
/// structural or object causality.
CausalVerdict Relate(const Transition& t1, const Transition& t2);
/// As above, and for composable pairs also cause interference.
CausalVerdict Relate(const Transition& t1, const Transition& t2, const Engine& engine);

/// Label equality, ignoring the memory carried by a bound output.
bool LabelsEquivalent(const Label& a, const Label& b);

/**
 * Square-lemma residuals. Given t1: X -> Y and t2: Y -> Z, looks for
 * t2': X -> Y1 and t1': Y1 -> Z with the same keys and directions and
 * label-equivalent labels. Returns {t2', t1'}.
 */
std::optional<std::pair<Transition, Transition>> Residual(const Transition& t1, const Transition& t2,
                                                          const Engine& engine);

/// Causality over a whole trace.
struct TraceCausality {
  struct Edge {
    std::size_t from;
    std::size_t to;
    bool structural;
    bool object;
  };
  std::vector<Edge> edges;                // direct relations, from < to
  std::vector<std::vector<bool>> closure;  // closure[p][q]: p causes q (p <= q)

  bool Related(std::size_t p, std::size_t q) const { return closure[p][q] || closure[q][p]; }
};

TraceCausality AnalyzeTrace(const Trace& trace);

struct EquivalenceBudget {
  std::size_t max_length = 8;
  std::size_t max_states = 100000;
};

enum class Equivalence { kEquivalent, kNotEquivalent, kBudgetExceeded };

std::string_view ToString(Equivalence e);

/**
 * Equivalence up to permutation of two coinitial traces, decided by
 * exhaustive rewriting: adjacent concurrent transitions are swapped through
 * their residuals and adjacent inverse pairs are cancelled. Rewriting never
 * lengthens a trace, so the search is finite.
 */
Equivalence TracesEquivalent(const Trace& s1, const Trace& s2, const Engine& engine,
                             const EquivalenceBudget& budget = {});

/**
 * Representative of the permutation class of a trace: the least (by length,
 * then text) trace reachable by swaps and cancellations. Empty optional when
 * the budget is exhausted.
 */
std::optional<std::string> TraceNormalForm(const Trace& trace, const Engine& engine,
                                           const EquivalenceBudget& budget = {});

/// A stable textual form of a trace (labels, directions, canonical targets).
std::string TraceKey(const Trace& trace);

}  // namespace rpi

#endif  // RPI_CAUSALITY_HPP_
