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

#include <thread>

#include <gtest/gtest.h>

#include "rpi/parser.hpp"
#include "rpi/session.hpp"

namespace rpi {
namespace {

TransitionId Find(const Session& s, Direction dir, const std::string& subject) {
  for (const auto& e : s.Transitions(dir))
    if (e.transition.label.action.subject == subject) return e.id;
  throw std::runtime_error("no transition on " + subject);
}

TEST(Session, StepsAndReplay) {
  SessionStore store;
  auto s = store.Create("new a.(b<a> | c<a> | a(z))", SemanticsKind::kRpi);
  EXPECT_EQ(s->Transitions().size(), 2u);
  ASSERT_EQ(s->Step(Find(*s, Direction::kForward, "b")), Session::StepResult::kOk);
  ASSERT_EQ(s->Step(Find(*s, Direction::kForward, "c")), Session::StepResult::kOk);
  // One input per extruder.
  std::vector<CauseSet> causes;
  for (const auto& e : s->Transitions(Direction::kForward))
    if (e.transition.label.action.kind == Action::Kind::kIn) causes.push_back(e.transition.label.cause);
  EXPECT_EQ(causes, (std::vector<CauseSet>{{1}, {2}}));
  EXPECT_TRUE(s->Replay());

  // Back to the start through first-class backward steps.
  while (!s->Transitions(Direction::kBackward).empty()) {
    ASSERT_EQ(s->Step(s->Transitions(Direction::kBackward).front().id), Session::StepResult::kOk);
    EXPECT_TRUE(s->Replay());
  }
  EXPECT_TRUE(Equal(s->State(), Lift(ParseProcess("new a.(b<a> | c<a> | a(z))"), SemanticsKind::kRpi)));
  EXPECT_EQ(s->History().size(), 4u);
}

TEST(Session, StaleIdsExpire) {
  SessionStore store;
  auto s = store.Create("a<b> | c<d>", SemanticsKind::kBs);
  auto listing = s->Transitions();
  ASSERT_EQ(listing.size(), 2u);
  ASSERT_EQ(s->Step(listing[0].id), Session::StepResult::kOk);
  EXPECT_EQ(s->Step(listing[1].id), Session::StepResult::kExpired);
  EXPECT_EQ(s->Step(999999), Session::StepResult::kExpired);
  for (const auto& e : s->Transitions()) EXPECT_GT(e.id, listing[1].id);
}

TEST(Session, KeysAreNeverReused) {
  SessionStore store;
  auto s = store.Create("a<b>", SemanticsKind::kRpi);
  ASSERT_EQ(s->Step(s->Transitions().front().id), Session::StepResult::kOk);
  ASSERT_EQ(s->Step(s->Transitions(Direction::kBackward).front().id), Session::StepResult::kOk);
  auto again = s->Transitions(Direction::kForward);
  ASSERT_EQ(again.size(), 1u);
  EXPECT_EQ(again[0].transition.label.key, 2u);
}

TEST(Session, TraceCarriesStructuralCauses) {
  SessionStore store;
  auto s = store.Create("b<a> | b(x).x<c>", SemanticsKind::kBs);
  for (const auto& e : s->Transitions())
    if (e.transition.label.action.kind == Action::Kind::kTau) ASSERT_EQ(s->Step(e.id), Session::StepResult::kOk);
  ASSERT_EQ(s->Step(s->Transitions(Direction::kForward).front().id), Session::StepResult::kOk);
  Json trace = s->TraceJson();
  ASSERT_EQ(trace["steps"].size(), 2u);
  EXPECT_EQ(trace["steps"][1]["kf"], Json::parse("[1,1]"));
  EXPECT_EQ(trace["steps"][0]["kf"], Json::array());
}

TEST(Session, StoreLifecycle) {
  SessionStore store;
  auto a = store.Create("a<b>", SemanticsKind::kRpi);
  auto b = store.Create("a<b>", SemanticsKind::kCvy);
  EXPECT_NE(a->id(), b->id());
  EXPECT_EQ(store.Find(a->id()), a);
  EXPECT_TRUE(store.Erase(a->id()));
  EXPECT_FALSE(store.Erase(a->id()));
  EXPECT_EQ(store.Find(a->id()), nullptr);
  EXPECT_EQ(store.Size(), 1u);
  EXPECT_THROW(store.Create("a<b", SemanticsKind::kRpi), ParseError);
}

TEST(Session, ConcurrentStepsAreSerialized) {
  SessionStore store;
  auto s = store.Create("a<b> | c<d> | e<f> | g<h>", SemanticsKind::kRpi);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (int n = 0; n < 20; ++n) {
        auto listing = s->Transitions();
        if (!listing.empty()) s->Step(listing[n % listing.size()].id);
      }
    });
  }
  for (auto& t : workers) t.join();
  EXPECT_TRUE(s->Replay());
}

}  // namespace
}  // namespace rpi
