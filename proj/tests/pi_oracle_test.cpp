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
#include "rpi/pi_oracle.hpp"

namespace rpi {
namespace {

std::size_t Count(const std::vector<PiStep>& steps, PiLabel::Kind kind) {
  std::size_t n = 0;
  for (const auto& s : steps) n += s.label.kind == kind;
  return n;
}

TEST(PiOracle, CommunicationAndPrefixes) {
  auto steps = PiSteps(ParseProcess("b<a>.0 | b(x).x<c>"));
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(Count(steps, PiLabel::Kind::kTau), 1u);
  for (const auto& s : steps)
    if (s.label.kind == PiLabel::Kind::kTau) EXPECT_TRUE(AlphaEqual(s.target, ParseProcess("0 | a<c>")));
}

TEST(PiOracle, OpenAndClose) {
  auto open = PiSteps(ParseProcess("new a.b<a>"));
  ASSERT_EQ(open.size(), 1u);
  EXPECT_EQ(open[0].label.kind, PiLabel::Kind::kBoundOut);
  auto close = PiSteps(ParseProcess("(new a.b<a>.a<d>) | b(x).x(y)"));
  std::size_t taus = 0;
  for (const auto& s : close) {
    if (s.label.kind != PiLabel::Kind::kTau) continue;
    ++taus;
    EXPECT_TRUE(AlphaEqual(s.target, ParseProcess("new a.(a<d> | a(y))"))) << ToString(s.target);
  }
  EXPECT_EQ(taus, 1u);
}

TEST(PiOracle, RestrictedSubjectBlocks) {
  EXPECT_TRUE(PiSteps(ParseProcess("new a.a<b>")).empty());
  EXPECT_TRUE(PiSteps(ParseProcess("new a.a(x)")).empty());
}

TEST(PiOracle, LateInputInstantiates) {
  auto steps = PiSteps(ParseProcess("b(x).x<c>"));
  ASSERT_EQ(steps.size(), 1u);
  ASSERT_TRUE(steps[0].instantiate);
  EXPECT_TRUE(AlphaEqual(steps[0].instantiate("e"), ParseProcess("e<c>")));
}

TEST(PiOracle, ForwardBisimulationOnExamples) {
  for (SemanticsKind kind : kAllKinds) {
    Engine engine(kind);
    for (const char* source : {"b<a>.0 | b(x).x<c>", "new a.(b<a> | c<a> | a(z))", "(new a.b<a>.a<d>) | b(x).x(y)"}) {
      auto r = CheckForwardBisim(Lift(ParseProcess(source), kind), engine, 4);
      EXPECT_TRUE(r.ok) << ToString(kind) << " " << source << ": " << r.counterexample;
      EXPECT_GT(r.states, 0u);
    }
  }
}

TEST(PiOracle, SkippedSubstitutionBreaksBisimulation) {
  Engine faulty(SemanticsKind::kRpi, Fault::kSkipSubstitution);
  auto r = CheckForwardBisim(Lift(ParseProcess("b<a>.0 | b(x).x<c>"), SemanticsKind::kRpi), faulty, 3);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.counterexample.empty());
}

}  // namespace
}  // namespace rpi
