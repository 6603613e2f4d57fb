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

#include "remeshx/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>

#include "remeshx/error.hpp"
#include "remeshx/generate.hpp"
#include "remeshx/parallel.hpp"
#include "remeshx/reindex.hpp"
#include "remeshx/serial.hpp"

namespace remeshx {

namespace {

using Clock = std::chrono::steady_clock;

void verify(const char* method, std::size_t n, const Mesh& out) {
  const std::size_t want_vertices = (n + 1) * (n + 1);
  if (out.num_vertices() != want_vertices || out.num_elements() != n * n) {
    throw Error(ErrorCode::kVerificationFailed,
                std::string(method) + " on grid n=" + std::to_string(n) + " produced " +
                    std::to_string(out.num_vertices()) + " vertices / " +
                    std::to_string(out.num_elements()) + " elements, expected " +
                    std::to_string(want_vertices) + " / " + std::to_string(n * n));
  }
}

template <typename Fn>
double time_median_ms(std::size_t reps, Fn&& fn) {
  std::vector<double> samples;
  samples.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    fn();
    const auto stop = Clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return median(std::move(samples));
}

std::string format_count(std::size_t v) {
  char buf[32];
  if (v >= 1000000) {
    std::snprintf(buf, sizeof buf, "%.2fM", static_cast<double>(v) / 1e6);
  } else if (v >= 1000) {
    std::snprintf(buf, sizeof buf, "%.2fK", static_cast<double>(v) / 1e3);
  } else {
    std::snprintf(buf, sizeof buf, "%zu", v);
  }
  return buf;
}

std::string format_ms(double ms) {
  char buf[32];
  if (ms < 1.0) return "<1ms";
  if (ms >= 10000.0) {
    std::snprintf(buf, sizeof buf, "%.1fs", ms / 1000.0);
  } else {
    std::snprintf(buf, sizeof buf, "%.1fms", ms);
  }
  return buf;
}

}  // namespace

double median(std::vector<double> samples) {
  if (samples.empty()) return 0.0;
  const std::size_t mid = samples.size() / 2;
  std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid),
                   samples.end());
  const double upper = samples[mid];
  if (samples.size() % 2 == 1) return upper;
  const double lower =
      *std::max_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

std::vector<BenchRecord> run_bench(std::span<const std::size_t> sizes, std::size_t reps) {
  if (reps == 0) throw Error(ErrorCode::kInvalidArgument, "run_bench: reps must be at least 1");
  std::vector<BenchRecord> records;
  for (const std::size_t n : sizes) {
    const Mesh grid = grid_quads(n);

    verify("reindex_serial", n, reindex_serial(grid));
    verify("reindex", n, reindex(grid).mesh);

    BenchRecord rec;
    rec.n = n;
    rec.quads_in = grid.num_elements();
    rec.vertices_in = grid.num_vertices();
    rec.threads = worker_count();
    std::size_t out_serial = 0;
    std::size_t out_parallel = 0;
    rec.t_serial_ms = time_median_ms(reps, [&] { out_serial = reindex_serial(grid).num_vertices(); });
    rec.t_parallel_ms = time_median_ms(reps, [&] { out_parallel = reindex(grid).mesh.num_vertices(); });
    if (out_serial != out_parallel) {
      throw Error(ErrorCode::kVerificationFailed,
                  "serial and parallel vertex counts disagree on grid n=" + std::to_string(n));
    }
    rec.vertices_out = out_parallel;
    records.push_back(rec);
  }
  return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "n,quads_in,vertices_in,vertices_out,t_serial_ms,t_parallel_ms,threads\n";
  for (const auto& r : records) {
    char serial[32];
    char parallel[32];
    std::snprintf(serial, sizeof serial, "%.3f", r.t_serial_ms);
    std::snprintf(parallel, sizeof parallel, "%.3f", r.t_parallel_ms);
    out << r.n << ',' << r.quads_in << ',' << r.vertices_in << ',' << r.vertices_out << ','
        << serial << ',' << parallel << ',' << r.threads << '\n';
  }
}

void print_bench_table(std::ostream& out, std::span<const BenchRecord> records) {
  auto row = [&](const char* label, auto&& cell) {
    char head[40];
    std::snprintf(head, sizeof head, "%-32s", label);
    out << head;
    for (const auto& r : records) {
      char buf[24];
      std::snprintf(buf, sizeof buf, " | %10s", cell(r).c_str());
      out << buf;
    }
    out << '\n';
  };
  row("N", [](const BenchRecord& r) { return std::to_string(r.n); });
  row("mesh: number of quads (in)", [](const BenchRecord& r) { return format_count(r.quads_in); });
  row("mesh: number of vertices (in)",
      [](const BenchRecord& r) { return format_count(r.vertices_in); });
  row("mesh: number of vertices (out)",
      [](const BenchRecord& r) { return format_count(r.vertices_out); });
  row("time (CPU, serial)", [](const BenchRecord& r) { return format_ms(r.t_serial_ms); });
  row("time (CPU, parallel)", [](const BenchRecord& r) { return format_ms(r.t_parallel_ms); });
  row("threads", [](const BenchRecord& r) { return std::to_string(r.threads); });
}

}  // namespace remeshx
