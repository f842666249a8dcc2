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

#ifndef RPI_BS_ORACLE_HPP_
#define RPI_BS_ORACLE_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rpi/semantics.hpp"
#include "rpi/syntax.hpp"

namespace rpi {

// ---------------------------------------------------------------------------
// Late causal semantics with cause wrappers K::A.
// ---------------------------------------------------------------------------

struct CausalTerm;
using CPtr = std::shared_ptr<const CausalTerm>;

/// kPlain leaves hold a prefix or 0; parallel composition and restriction
/// are always lifted to kPar / kRestrict nodes.
struct CausalTerm {
  enum class Kind { kPlain, kCause, kPar, kRestrict };
  Kind kind = Kind::kPlain;
  ProcessPtr process;     // kPlain
  std::set<Key> causes;   // kCause
  std::string name;       // kRestrict
  CPtr left;              // wrapped term, restriction body, or left branch
  CPtr right;             // kPar
};

CPtr FromProcess(const ProcessPtr& p);
CPtr CauseWrap(std::set<Key> causes, CPtr body);
std::string ToString(const CPtr& a);

/// The erasing function onto plain pi-calculus: drops every wrapper.
ProcessPtr Lambda(const CPtr& a);

/// K;k : pi. Silent steps carry key 0 and no causes.
struct BSLabel {
  std::set<Key> causes;
  Key key = 0;
  PiLabel action;

  std::string ToString() const;
  friend bool operator==(const BSLabel&, const BSLabel&) = default;
};

struct BSStep {
  BSLabel label;
  CPtr target;
  /// Inputs only: the target with the received name for the binder.
  std::function<CPtr(const std::string&)> instantiate;
};

/// Every step of a, visible steps using key k.
std::vector<BSStep> BSSteps(const CPtr& a, Key k);

/// Maps a framework label to the BS label shape (causes left empty).
BSLabel Gamma(const Label& label);

// ---------------------------------------------------------------------------
// Dependency graph and Rem.
// ---------------------------------------------------------------------------

/// Vertices are past prefixes of a history, labelled by key; both ends of a
/// communication appear, so such keys label two vertices joined both ways.
struct DependencyGraph {
  std::vector<Key> vertices;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  /// Edge list with vertex multiplicities, one item per line.
  std::string ToString() const;
};

DependencyGraph BuildDependencyGraph(const RPtr& x);

/// K_F: keys of every vertex with a path to a vertex keyed i, minus i.
std::multiset<Key> StructuralCauses(const DependencyGraph& g, Key i);

/// Rem: restrict to the paths targeting i, contract every bidirectional
/// pair into a silent vertex, and keep the remaining keys other than i.
/// With contract = false the contraction is skipped (fault injection).
std::set<Key> Rem(const DependencyGraph& g, Key i, bool contract = true);

// ---------------------------------------------------------------------------
// Correspondence with the framework instantiated with Gamma_w.
// ---------------------------------------------------------------------------

struct CorrespondenceOptions {
  bool contract = true;            // passed to Rem
  std::size_t max_states = 200000;  // per direction
};

struct CorrespondenceResult {
  bool ok = true;
  bool budget_exceeded = false;
  std::size_t traces = 0;
  std::string mismatch;
};

/**
 * Two-sided trace matching. Every BS trace of p up to `depth` steps is
 * matched by a framework trace with equal erasures, gamma-equal labels and
 * Rem(K_F) = K_B at each step, and conversely.
 */
CorrespondenceResult CheckStructuralCorrespondence(const ProcessPtr& p, int depth,
                                                   const CorrespondenceOptions& options = {});

/**
 * Compares, on every framework trace up to `depth` forward steps, the
 * closure of the framework causality restricted to visible steps with the
 * closure of BS causality (cause sets plus the object rule for extruded
 * names) on the matching BS trace.
 */
CorrespondenceResult CheckCausalCorrespondence(const ProcessPtr& p, int depth,
                                               const CorrespondenceOptions& options = {});

}  // namespace rpi

#endif  // RPI_BS_ORACLE_HPP_
