// Copyright 2026 The remeshx Authors.
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

#include "remeshx/generate.hpp"
#include "remeshx/parallel.hpp"
#include "remeshx/reindex.hpp"
#include "remeshx/serial.hpp"

namespace {

void set_counters(benchmark::State& state, const remeshx::Mesh& grid) {
  state.counters["vertices_in"] = static_cast<double>(grid.num_vertices());
  state.counters["vertices/s"] = benchmark::Counter(
      static_cast<double>(grid.num_vertices()), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_ReindexSerial(benchmark::State& state) {
  const auto grid = remeshx::grid_quads(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(remeshx::reindex_serial(grid));
  }
  set_counters(state, grid);
}
BENCHMARK(BM_ReindexSerial)->Arg(8)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ReindexParallel(benchmark::State& state) {
  const auto grid = remeshx::grid_quads(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(remeshx::reindex(grid));
  }
  set_counters(state, grid);
  state.counters["threads"] = remeshx::worker_count();
}
BENCHMARK(BM_ReindexParallel)->Arg(8)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_KeyValueSort(benchmark::State& state) {
  const auto grid = remeshx::grid_quads(static_cast<std::size_t>(state.range(0)));
  const auto ids = remeshx::fill_sequence(grid.num_vertices());
  for (auto _ : state) {
    benchmark::DoNotOptimize(remeshx::key_value_sort(grid.vertices(), ids));
  }
  set_counters(state, grid);
}
BENCHMARK(BM_KeyValueSort)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_InclusiveScan(benchmark::State& state) {
  const remeshx::FlagArray flags(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(remeshx::inclusive_scan(flags));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InclusiveScan)->Arg(1 << 16)->Arg(1 << 22)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
