// Copyright 2026 The segrover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <string>

#include "segrover/grover.hpp"
#include "segrover/kernels.hpp"
#include "segrover/puzzle_file.hpp"

namespace {

using namespace segrover;

const OracleArtifact& caseOracle() {
  static const OracleArtifact art = [] {
    const Puzzle p = loadPuzzle(std::string(SEGROVER_PUZZLE_DIR) + "/case_study.puz");
    return compileOracle(p.config, p.spec);
  }();
  return art;
}

kernels::SweepSpec sweepSpec(const OracleArtifact& art, int freeBits) {
  kernels::SweepSpec s;
  for (int i = 0; i < art.inputWidth(); ++i) {
    if (i < freeBits) {
      s.freeWires.push_back(art.inputWires[i]);
    } else {
      s.fixed.push_back({art.inputWires[i], false});
    }
  }
  s.mustRestore = art.ancillaWires;
  s.output = art.outputWire;
  return s;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto& art = caseOracle();
  const auto spec = sweepSpec(art, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sweepSerial(art.circuit, spec));
  state.SetItemsProcessed(state.iterations() << state.range(0));
}
BENCHMARK(BM_SweepSerial)->Arg(10)->Arg(12);

void BM_SweepSliced(benchmark::State& state) {
  const auto& art = caseOracle();
  const auto spec = sweepSpec(art, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sweepSliced(art.circuit, spec));
  state.SetItemsProcessed(state.iterations() << state.range(0));
}
BENCHMARK(BM_SweepSliced)->Arg(10)->Arg(12)->Arg(16);

void BM_GroverIteration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bool parallel = state.range(1) != 0;
  kernels::MarkTable marks(((std::size_t{1} << n) + 63) / 64, 0);
  marks[0] = 1;
  GroverOptions opts;
  opts.parallel = parallel;
  opts.capacity = n;
  for (auto _ : state) benchmark::DoNotOptimize(runGrover(marks, n, 4, opts));
}
BENCHMARK(BM_GroverIteration)->Args({16, 0})->Args({16, 1})->Args({20, 0})->Args({20, 1});

}  // namespace

BENCHMARK_MAIN();
