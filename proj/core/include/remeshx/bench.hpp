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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace remeshx {

/// One row of the scaling report.
struct BenchRecord {
  std::size_t n = 0;
  std::size_t quads_in = 0;
  std::size_t vertices_in = 0;
  std::size_t vertices_out = 0;
  double t_serial_ms = 0.0;    // median over repetitions
  double t_parallel_ms = 0.0;  // median over repetitions
  unsigned threads = 0;
};

inline constexpr std::size_t kDefaultBenchReps = 5;

/// For each n: builds grid_quads(n), runs one untimed warm-up of each method,
/// then times reindex_serial() and reindex() `reps` times each and keeps the
/// medians. Throws kVerificationFailed if either method does not produce
/// (n + 1)^2 vertices and n^2 elements.
std::vector<BenchRecord> run_bench(std::span<const std::size_t> sizes,
                                   std::size_t reps = kDefaultBenchReps);

double median(std::vector<double> samples);

/// Header line plus one line per record.
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Human-readable table, one row per grid size.
void print_bench_table(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace remeshx
