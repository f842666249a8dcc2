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

#ifndef RPI_EXTRUSION_HPP_
#define RPI_EXTRUSION_HPP_

#include <vector>

#include "rpi/memory.hpp"
#include "rpi/syntax.hpp"

namespace rpi {

/// The `#i` operation lifted to processes: applies Memory::RemoveIndex to
/// every restriction in x. Identity for kRpi.
RPtr RemoveKey(const RPtr& x, Key i);

/// The instantiation relation i1 ~>_x i2: i1 keys a past input whose
/// continuation contains a past prefix keyed i2 whose subject carries the
/// instantiator i1.
bool InstantiationRelated(const RPtr& x, Key i1, Key i2);

/**
 * Admissible new causes for an action whose subject is the restricted name
 * (rule Cause Ref). `m` must be non-empty.
 *
 * kRpi: with k = {*} a single extruder must be picked, giving one singleton
 * per key of gamma. With k = {k0}, k may be kept, or replaced by {k1} for any
 * k1 in gamma with k0 ~>_x k1.
 * kBs: exactly k u {w}.   kCvy: exactly k u omega.
 */
std::vector<CauseSet> CauseCandidates(const Memory& m, const CauseSet& k, const RPtr& x);

}  // namespace rpi

#endif  // RPI_EXTRUSION_HPP_
