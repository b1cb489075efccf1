// Copyright 2026 The respgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "respgap/classify.hpp"
#include "respgap/responsibility.hpp"
#include "respgap/text.hpp"
#include "respgap/verify.hpp"

namespace {

using namespace respgap;

void BM_SolveEwin(benchmark::State& state) {
  Mechanism m = example("mechanism-M");
  for (auto _ : state)
    benchmark::DoNotOptimize(solve(m, 1, Outcome::Yes, Semantics::EWin));
}
BENCHMARK(BM_SolveEwin);

void BM_AnalyzeEpistemic(benchmark::State& state) {
  Mechanism m = example("mechanism-M");
  for (auto _ : state)
    benchmark::DoNotOptimize(analyze(m, RespSemantics::Epistemic));
}
BENCHMARK(BM_AnalyzeEpistemic);

void BM_Classify(benchmark::State& state) {
  Mechanism m = example("academic");
  for (auto _ : state) benchmark::DoNotOptimize(classify(m));
}
BENCHMARK(BM_Classify);

void BM_EnumerateDepth1(benchmark::State& state) {
  EnumerationConfig cfg = default_theorem1_config();
  cfg.max_depth = 1;
  for (auto _ : state) {
    long long n = enumerate(cfg, [](const Mechanism&) { return true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateDepth1);

void BM_ParseSerialize(benchmark::State& state) {
  const std::string& text = example_text("mechanism-M");
  for (auto _ : state) {
    ParseResult r = parse(text);
    benchmark::DoNotOptimize(serialize(*r.document));
  }
}
BENCHMARK(BM_ParseSerialize);

}  // namespace

BENCHMARK_MAIN();
