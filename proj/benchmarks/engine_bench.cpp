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

#include <benchmark/benchmark.h>

#include "rpi/causality.hpp"
#include "rpi/corpus.hpp"
#include "rpi/parser.hpp"
#include "rpi/semantics.hpp"
#include "rpi/verification.hpp"

namespace {

using namespace rpi;

// Forward and backward enumeration on a state with two extrusions done.
void BM_Enumerate(benchmark::State& state) {
  auto kind = static_cast<SemanticsKind>(state.range(0));
  Engine engine(kind);
  RPtr x = Lift(ParseProcess("new a.(b<a> | c<a> | a(z).z<d>) | b(y).y<e>"), kind);
  x = engine.Forward(x, 1).front().target;
  x = engine.Forward(x, 2).front().target;
  for (auto _ : state) {
    auto f = engine.Forward(x, 3);
    auto b = engine.Backward(x);
    benchmark::DoNotOptimize(f.size() + b.size());
  }
  state.SetLabel(std::string(ToString(kind)));
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 2);

void BM_ParsePrint(benchmark::State& state) {
  const std::string source = "new a.(b<a>.a(x).x<c> | c<a> | a(z).(z<d> | d(w))) | b(y).y<e> | c(u).u<f>";
  for (auto _ : state) benchmark::DoNotOptimize(ToString(ParseProcess(source)));
}
BENCHMARK(BM_ParsePrint);

// Rewriting-based equivalence of two interleavings of independent steps.
void BM_TraceEquivalence(benchmark::State& state) {
  Engine engine(SemanticsKind::kRpi);
  RPtr x = Lift(ParseProcess("a<b> | c<d> | e<f> | g<h>"), SemanticsKind::kRpi);
  Trace s1, s2;
  RPtr y = x, z = x;
  for (Key k = 1; k <= 4; ++k) {
    s1.push_back(engine.Forward(y, k).front());
    y = s1.back().target;
    s2.push_back(engine.Forward(z, k).back());
    z = s2.back().target;
  }
  for (auto _ : state) benchmark::DoNotOptimize(TracesEquivalent(s1, s2, engine));
}
BENCHMARK(BM_TraceEquivalence);

void BM_LoopLemmaCorpus(benchmark::State& state) {
  CheckOptions options;
  options.parallel = false;
  options.depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CheckLoopLemma(DefaultCorpus(), SemanticsKind::kBs, options).ok);
}
BENCHMARK(BM_LoopLemmaCorpus)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
