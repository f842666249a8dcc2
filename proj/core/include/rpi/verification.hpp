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

#ifndef RPI_VERIFICATION_HPP_
#define RPI_VERIFICATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rpi/causality.hpp"
#include "rpi/corpus.hpp"
#include "rpi/semantics.hpp"

namespace rpi {

struct CheckOptions {
  int depth = 0;  // 0: use each entry's own bound
  Fault fault = Fault::kNone;
  EquivalenceBudget budget;
  bool parallel = true;  // one task per corpus entry
  // Square lemma only: treat pairs related by cause interference as
  // concurrent (structural and object causality alone decide).
  bool literal_concurrency = false;
};

/**
 * Outcome of one property over a corpus. On failure `entry` names the
 * offending corpus entry and `witness` is a trace script (see the `trace`
 * command of rpi-cli) that replays the counterexample.
 */
struct CheckReport {
  std::string property;
  std::string kind;
  std::size_t entries = 0;
  std::size_t states = 0;
  std::size_t traces = 0;
  bool ok = true;
  bool budget_exceeded = false;
  std::string entry;
  std::string counterexample;
  std::string witness;

  nlohmann::json ToJson() const;
  std::string Summary() const;
};

CheckReport CheckLoopLemma(const Corpus& corpus, SemanticsKind kind, const CheckOptions& options = {});
CheckReport CheckSquareLemma(const Corpus& corpus, SemanticsKind kind, const CheckOptions& options = {});
CheckReport CheckCausalConsistency(const Corpus& corpus, SemanticsKind kind, const CheckOptions& options = {});
CheckReport CheckBisim(const Corpus& corpus, SemanticsKind kind, const CheckOptions& options = {});
/// Structural and causal correspondence with the BS oracle (kind is BS).
CheckReport CheckBsCorrespondence(const Corpus& corpus, const CheckOptions& options = {});

}  // namespace rpi

#endif  // RPI_VERIFICATION_HPP_
