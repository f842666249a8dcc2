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

#include <algorithm>

#include <gtest/gtest.h>

#include "rpi/parser.hpp"
#include "rpi/semantics.hpp"

namespace rpi {
namespace {

Transition Only(const std::vector<Transition>& ts, Action::Kind kind, const std::string& subject) {
  auto it = std::find_if(ts.begin(), ts.end(), [&](const Transition& t) {
    return t.label.action.kind == kind && (kind == Action::Kind::kTau || t.label.action.subject == subject);
  });
  if (it == ts.end()) throw std::runtime_error("no such transition: " + subject);
  return *it;
}

std::vector<Transition> All(const std::vector<Transition>& ts, Action::Kind kind, const std::string& subject) {
  std::vector<Transition> out;
  for (const auto& t : ts)
    if (t.label.action.kind == kind && t.label.action.subject == subject) out.push_back(t);
  return out;
}

TEST(Engine, CommunicationExample) {
  for (SemanticsKind kind : kAllKinds) {
    Engine engine(kind);
    RPtr x = Lift(ParseProcess("b<a>.0 | b(x).x<c>"), kind);
    auto fwd = engine.Forward(x, 1);
    ASSERT_EQ(fwd.size(), 3u);
    EXPECT_EQ(fwd[0].label.action, Action::Out("b", "a"));
    EXPECT_EQ(fwd[1].label.action, Action::In("b", "x"));
    EXPECT_EQ(fwd[2].label.action, Action::Tau());
    for (const auto& t : fwd) {
      EXPECT_EQ(t.label.key, 1u);
      EXPECT_EQ(t.label.cause, NoCause());
      EXPECT_EQ(t.label.inst, kStar);
    }
    RPtr expected = ParseRProcess("b<a>[1,*] | b(x)[1,*].a^1<c>", kind);
    EXPECT_TRUE(Equal(fwd[2].target, expected)) << ToString(fwd[2].target);
    auto bwd = engine.Backward(fwd[2].target);
    ASSERT_EQ(bwd.size(), 1u);
    EXPECT_EQ(bwd[0].label, fwd[2].label);
    EXPECT_TRUE(Equal(bwd[0].target, x));
    // The instantiated continuation now outputs on a, keyed by the communication.
    auto next = engine.Forward(fwd[2].target, 2);
    ASSERT_EQ(next.size(), 1u);
    EXPECT_EQ(next[0].label.inst, 1u);
    EXPECT_EQ(next[0].label.action, Action::Out("a", "c"));
  }
}

TEST(Engine, InitialProcessHasNoBackwardStep) {
  for (SemanticsKind kind : kAllKinds) {
    Engine engine(kind);
    EXPECT_TRUE(engine.Backward(Lift(ParseProcess("b<a>.0 | b(x).x<c>"), kind)).empty());
  }
}

struct Extruded {
  RPtr state;
  Transition first, second;
};

// new a.(b<a> | c<a> | a(z)) after b<a> keyed 1 and c<a> keyed 2.
Extruded ExtrudeTwice(SemanticsKind kind) {
  Engine engine(kind);
  RPtr x = Lift(ParseProcess("new a.(b<a> | c<a> | a(z))"), kind);
  auto first = engine.Forward(x, 1);
  EXPECT_EQ(first.size(), 2u);  // the input on the private a is blocked
  Transition i = Only(first, Action::Kind::kBoundOut, "b");
  Transition h = Only(engine.Forward(i.target, 2), Action::Kind::kBoundOut, "c");
  return {h.target, i, h};
}

TEST(Engine, ThreeSemanticsRpi) {
  Extruded e = ExtrudeTwice(SemanticsKind::kRpi);
  EXPECT_EQ(e.first.label.cause, NoCause());
  EXPECT_EQ(e.second.label.cause, NoCause());
  EXPECT_EQ(e.second.label.action.memory->gamma, std::set<Key>{1});
  auto inputs = All(Engine(SemanticsKind::kRpi).Forward(e.state, 3), Action::Kind::kIn, "a");
  ASSERT_EQ(inputs.size(), 2u);
  EXPECT_EQ(inputs[0].label.cause, CauseSet{1});
  EXPECT_EQ(inputs[1].label.cause, CauseSet{2});
}

TEST(Engine, ThreeSemanticsBs) {
  Extruded e = ExtrudeTwice(SemanticsKind::kBs);
  EXPECT_EQ(e.first.label.cause, NoCause());
  EXPECT_EQ(e.second.label.cause, (CauseSet{kStar, 1}));
  ASSERT_EQ(e.state->kind, RProcess::Kind::kNew);
  EXPECT_EQ(e.state->memory.gamma, (std::set<Key>{1, 2}));
  EXPECT_EQ(e.state->memory.w, 1u);
  auto inputs = All(Engine(SemanticsKind::kBs).Forward(e.state, 3), Action::Kind::kIn, "a");
  ASSERT_EQ(inputs.size(), 1u);
  EXPECT_EQ(inputs[0].label.cause, (CauseSet{kStar, 1}));
}

TEST(Engine, ThreeSemanticsCvy) {
  Extruded e = ExtrudeTwice(SemanticsKind::kCvy);
  EXPECT_EQ(e.first.label.cause, NoCause());
  EXPECT_EQ(e.second.label.cause, NoCause());
  EXPECT_EQ(e.state->memory.omega, (std::set<Key>{kStar, 1, 2}));
  auto inputs = All(Engine(SemanticsKind::kCvy).Forward(e.state, 3), Action::Kind::kIn, "a");
  ASSERT_EQ(inputs.size(), 1u);
  EXPECT_EQ(inputs[0].label.cause, (CauseSet{kStar, 1, 2}));
}

TEST(Engine, BackwardExtrusionOrderUnderBs) {
  // The first extruder caused the second, so it is undone last.
  Extruded e = ExtrudeTwice(SemanticsKind::kBs);
  auto bwd = Engine(SemanticsKind::kBs).Backward(e.state);
  ASSERT_EQ(bwd.size(), 1u);
  EXPECT_EQ(bwd[0].label.key, 2u);
  // Under RPI both are undoable.
  Extruded r = ExtrudeTwice(SemanticsKind::kRpi);
  EXPECT_EQ(Engine(SemanticsKind::kRpi).Backward(r.state).size(), 2u);
}

TEST(Engine, CloseKeepsTheNameBound) {
  Engine engine(SemanticsKind::kRpi);
  RPtr x = Lift(ParseProcess("(new a.b<a>.a<d>) | b(x).x(y)"), SemanticsKind::kRpi);
  const Transition& tau = Only(engine.Forward(x, 1), Action::Kind::kTau, "");
  EXPECT_EQ(tau.target->kind, RProcess::Kind::kNew);
  EXPECT_EQ(tau.target->memory, Memory::Init(SemanticsKind::kRpi));
  // The private channel now links the two sides.
  const Transition& inner = Only(engine.Forward(tau.target, 2), Action::Kind::kTau, "");
  EXPECT_EQ(inner.label.key, 2u);
  auto back = engine.Backward(tau.target);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_TRUE(Equal(back[0].target, x));
}

TEST(Engine, FreshKeysAndOrder) {
  Engine engine(SemanticsKind::kRpi);
  RPtr x = ParseRProcess("b<a>[1,*] | b(x)[1,*].a^1<c> | d<e>", SemanticsKind::kRpi);
  EXPECT_EQ(Engine::DefaultFreshKey(x), 2u);
  auto a = engine.Forward(x, 5);
  auto b = engine.Forward(x, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    EXPECT_EQ(a[n].label, b[n].label);
    EXPECT_EQ(a[n].label.key, 5u);
  }
}

TEST(Engine, LoopOnEveryReachableStateOfAnExample) {
  for (SemanticsKind kind : kAllKinds) {
    Engine engine(kind);
    std::vector<RPtr> frontier{Lift(ParseProcess("new a.(b<a> | c<a> | a(z).z<d>) | b(y).y<e>"), kind)};
    for (int depth = 0; depth < 3; ++depth) {
      std::vector<RPtr> next;
      for (const RPtr& x : frontier) {
        for (const Transition& t : engine.Forward(x)) {
          bool undone = false;
          for (const Transition& b : engine.Backward(t.target))
            undone = undone || (b.label == t.label && Equal(b.target, x));
          EXPECT_TRUE(undone) << ToString(kind) << ": " << t.ToString();
          next.push_back(t.target);
        }
      }
      frontier = std::move(next);
    }
  }
}

TEST(Engine, FaultDropOutputUndo) {
  Engine faulty(SemanticsKind::kRpi, Fault::kDropOutputUndo);
  RPtr x = Lift(ParseProcess("b<a>"), SemanticsKind::kRpi);
  auto fwd = faulty.Forward(x, 1);
  ASSERT_EQ(fwd.size(), 1u);
  EXPECT_TRUE(faulty.Backward(fwd[0].target).empty());
  EXPECT_EQ(Engine(SemanticsKind::kRpi).Backward(fwd[0].target).size(), 1u);
}

TEST(Engine, EraseLabel) {
  Label bound{1, NoCause(), kStar, Action::BoundOut("b", "a", Memory::Init(SemanticsKind::kRpi))};
  EXPECT_EQ(EraseLabel(bound).kind, PiLabel::Kind::kBoundOut);
  Label free{1, NoCause(), kStar, Action::BoundOut("b", "a", Memory::Init(SemanticsKind::kRpi).Add(4))};
  EXPECT_EQ(EraseLabel(free).kind, PiLabel::Kind::kOut);
  EXPECT_EQ(EraseLabel(free).object, "a");
}

TEST(Engine, LabelText) {
  Extruded e = ExtrudeTwice(SemanticsKind::kBs);
  EXPECT_EQ(e.second.label.ToString(), "(2,{*,1},*):c<(a)>_{1}_1");
}

}  // namespace
}  // namespace rpi
