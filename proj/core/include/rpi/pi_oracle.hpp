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

#ifndef RPI_PI_ORACLE_HPP_
#define RPI_PI_ORACLE_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rpi/semantics.hpp"
#include "rpi/syntax.hpp"

namespace rpi {

/// One step of the late pi-calculus LTS. For an input b(x) the target has x
/// free; `instantiate(a)` yields the target with a received for x.
struct PiStep {
  PiLabel label;
  ProcessPtr target;
  std::function<ProcessPtr(const std::string&)> instantiate;
};

/// Late transition system: Out, In, Par (both sides), Com and Close (both
/// orientations), Res, Open.
std::vector<PiStep> PiSteps(const ProcessPtr& p);

struct BisimResult {
  bool ok = true;
  std::size_t states = 0;
  std::string counterexample;
};

/**
 * Bounded check that {(X, erase(X))} is a strong bisimulation on the forward
 * moves: every forward step of a reachable X is matched by a pi step of
 * erase(X) with the erased label and vice versa, with related targets.
 * States are explored breadth first up to `depth` forward steps from x.
 */
BisimResult CheckForwardBisim(const RPtr& x, const Engine& engine, int depth);

}  // namespace rpi

#endif  // RPI_PI_ORACLE_HPP_
