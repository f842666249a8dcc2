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

#include <gtest/gtest.h>

#include "rpi/parser.hpp"
#include "rpi/verification.hpp"

namespace rpi {
namespace {

CheckOptions Depth(int d) {
  CheckOptions o;
  o.depth = d;
  return o;
}

TEST(Verification, PropertiesHoldOnCorpusAtDepthThree) {
  for (SemanticsKind kind : kAllKinds) {
    for (auto check : {CheckLoopLemma, CheckSquareLemma, CheckBisim}) {
      CheckReport r = check(DefaultCorpus(), kind, Depth(3));
      EXPECT_TRUE(r.ok) << r.Summary() << "\n" << r.counterexample;
      EXPECT_EQ(r.entries, DefaultCorpus().size());
      EXPECT_GT(r.states, 0u);
    }
  }
}

TEST(Verification, ConsistencyOnSmallCorpus) {
  Corpus small;
  for (const auto& e : DefaultCorpus())
    if (e.name == "three_extruders" || e.name == "com_substitution" || e.name == "close_simple") small.push_back(e);
  ASSERT_EQ(small.size(), 3u);
  for (SemanticsKind kind : kAllKinds) {
    CheckReport r = CheckCausalConsistency(small, kind, Depth(3));
    EXPECT_TRUE(r.ok) << r.Summary() << "\n" << r.counterexample;
    EXPECT_GT(r.traces, 0u);
  }
}

TEST(Verification, BsCorrespondence) {
  CheckReport r = CheckBsCorrespondence(DefaultCorpus(), Depth(2));
  EXPECT_TRUE(r.ok) << r.Summary() << "\n" << r.counterexample;
}

TEST(Verification, MissingUndoRuleBreaksLoopLemma) {
  CheckOptions o = Depth(2);
  o.fault = Fault::kDropOutputUndo;
  CheckReport r = CheckLoopLemma(DefaultCorpus(), SemanticsKind::kRpi, o);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.counterexample.empty());
  EXPECT_NE(r.witness.find("semantics rpi"), std::string::npos);
}

TEST(Verification, SkippedSubstitutionBreaksBisimulation) {
  CheckOptions o = Depth(3);
  o.fault = Fault::kSkipSubstitution;
  EXPECT_FALSE(CheckBisim(DefaultCorpus(), SemanticsKind::kBs, o).ok);
}

TEST(Verification, StaleMemoryOnOpenIsCaught) {
  CheckOptions o = Depth(3);
  o.fault = Fault::kKeepRestrictionOnOpen;
  EXPECT_FALSE(CheckLoopLemma(DefaultCorpus(), SemanticsKind::kCvy, o).ok);
  EXPECT_FALSE(CheckBisim(DefaultCorpus(), SemanticsKind::kCvy, o).ok);
}

TEST(Verification, LiteralConcurrencyFailsSquareForIndexedMemories) {
  CheckOptions o = Depth(3);
  o.literal_concurrency = true;
  EXPECT_TRUE(CheckSquareLemma(DefaultCorpus(), SemanticsKind::kRpi, o).ok);
  EXPECT_FALSE(CheckSquareLemma(DefaultCorpus(), SemanticsKind::kBs, o).ok);
  EXPECT_FALSE(CheckSquareLemma(DefaultCorpus(), SemanticsKind::kCvy, o).ok);
}

TEST(Verification, SequentialAndParallelAgree) {
  CheckOptions par = Depth(3);
  CheckOptions seq = Depth(3);
  seq.parallel = false;
  CheckReport a = CheckLoopLemma(DefaultCorpus(), SemanticsKind::kBs, par);
  CheckReport b = CheckLoopLemma(DefaultCorpus(), SemanticsKind::kBs, seq);
  EXPECT_EQ(a.states, b.states);
  EXPECT_EQ(a.traces, b.traces);
}

TEST(Verification, ReportJson) {
  CheckReport r = CheckLoopLemma(DefaultCorpus(), SemanticsKind::kRpi, Depth(1));
  nlohmann::json j = r.ToJson();
  EXPECT_EQ(j["property"], "loop");
  EXPECT_EQ(j["kind"], "rpi");
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["entries"], DefaultCorpus().size());
}

}  // namespace
}  // namespace rpi
