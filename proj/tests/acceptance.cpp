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

// Acceptance runner: one PASS/FAIL line per criterion, thresholds pinned below.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixture.hpp"
#include "remeshx/bench.hpp"
#include "remeshx/generate.hpp"
#include "remeshx/io.hpp"
#include "remeshx/mesh_ops.hpp"
#include "remeshx/parallel.hpp"
#include "remeshx/property.hpp"
#include "remeshx/reindex.hpp"

namespace {

using namespace remeshx;
using Clock = std::chrono::steady_clock;

constexpr double kWorkedExampleBudgetMs = 1.0;
constexpr double kMinSpeedup = 2.0;
constexpr unsigned kMinCoresForSpeedup = 4;
constexpr std::size_t kSpeedupGrid = 1024;
constexpr std::size_t kSpeedupReps = 5;
constexpr std::size_t kPropertyMeshes = 1000;
constexpr double kPropertyBudgetS = 60.0;
constexpr std::size_t kLawInputs = 100;
constexpr double kLawBudgetS = 30.0;
constexpr std::size_t kRoundTripMeshes = 50;

enum class Outcome { kPass, kFail, kSkip };

struct Line {
  Outcome outcome;
  std::string detail;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(precision);
  s << v;
  return s.str();
}

Line worked_example() {
  const Mesh in = testing::worked_mesh();
  const ReindexResult r = reindex(in);
  const auto& s = r.scratch;
  const std::vector<std::uint8_t> is_used = {1, 1, 1, 0, 1, 1, 1, 1, 0, 1};
  const std::vector<std::uint8_t> nodup = {1, 0, 0, 1, 1, 0, 1, 0, 1, 1};
  const std::vector<std::uint32_t> scan = {1, 1, 1, 2, 3, 3, 4, 4, 5, 6};
  const std::vector<std::uint32_t> new_idx = {0, 0, 0, 1, 2, 2, 3, 3, 4, 5};
  const std::vector<std::uint32_t> out_idx = {0, 1, 2, 0, 2, 3, 2, 4, 5, 2, 5, 3};

  std::vector<std::string> bad;
  if (s.is_used != is_used) bad.push_back("isUsed");
  if (s.nodup != nodup) bad.push_back("nodup");
  if (s.prefix_sum != scan) bad.push_back("scan");
  if (s.new_idx != new_idx) bad.push_back("newIdx");
  if (s.new_n != 6 || r.mesh.num_vertices() != 6) bad.push_back("newN");
  if (r.mesh.indices() != out_idx) bad.push_back("indices");
  if (r.mesh.vertices() != testing::vertices_of("ABCDEF")) bad.push_back("vertices");

  // Median of repeated runs after a warm-up, so one-off pool start-up is excluded.
  std::vector<double> samples;
  for (int i = 0; i < 101; ++i) {
    const auto t0 = Clock::now();
    const ReindexResult again = reindex(in);
    samples.push_back(elapsed_ms(t0));
    if (again.mesh != r.mesh) bad.push_back("nondeterministic");
  }
  const double ms = median(samples);
  if (ms >= kWorkedExampleBudgetMs) bad.push_back("runtime");

  std::string detail = "6 vertices, indices (0,1,2)(0,2,3)(2,4,5)(2,5,3); median " + fmt(ms, 4) +
                       " ms < " + fmt(kWorkedExampleBudgetMs, 1) + " ms";
  if (!bad.empty()) {
    detail = "mismatch:";
    for (const auto& b : bad) detail += " " + b;
  }
  return {bad.empty() ? Outcome::kPass : Outcome::kFail, detail};
}

Line grid_counts() {
  struct Row {
    std::size_t n, quads, in, out;
  };
  const std::array<Row, 3> rows = {{{8, 64, 320, 81},
                                    {64, 4096, 20480, 4225},
                                    {1024, 1048576, 5242880, 1050625}}};
  const auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  for (const Row& row : rows) {
    const Mesh grid = grid_quads(row.n);
    const Mesh out = reindex(grid).mesh;
    const bool match = grid.num_elements() == row.quads && grid.num_vertices() == row.in &&
                       out.num_vertices() == row.out && out.num_elements() == row.quads;
    ok = ok && match;
    detail += "N=" + std::to_string(row.n) + ": " + std::to_string(grid.num_elements()) + "/" +
              std::to_string(grid.num_vertices()) + "/" + std::to_string(out.num_vertices()) +
              (match ? "" : " (expected " + std::to_string(row.quads) + "/" +
                                std::to_string(row.in) + "/" + std::to_string(row.out) + ")") +
              "; ";
  }
  detail += fmt(elapsed_ms(t0) / 1000.0, 2) + " s";
  return {ok ? Outcome::kPass : Outcome::kFail, detail};
}

Line speedup() {
  const std::array<std::size_t, 1> sizes = {kSpeedupGrid};
  const BenchRecord rec = run_bench(sizes, kSpeedupReps).front();
  const double ratio = rec.t_serial_ms / rec.t_parallel_ms;
  const unsigned cores = hardware_worker_count();
  std::string detail = "N=" + std::to_string(kSpeedupGrid) + " serial " + fmt(rec.t_serial_ms, 1) +
                       " ms, parallel " + fmt(rec.t_parallel_ms, 1) + " ms, " + fmt(ratio, 2) +
                       "x with " + std::to_string(rec.threads) + " threads (need >= " +
                       fmt(kMinSpeedup, 1) + "x)";
  if (ratio >= kMinSpeedup) return {Outcome::kPass, detail};
  if (cores < kMinCoresForSpeedup) {
    return {Outcome::kSkip, detail + "; precondition unmet: " + std::to_string(cores) +
                                " core(s) available, criterion requires >= " +
                                std::to_string(kMinCoresForSpeedup)};
  }
  return {Outcome::kFail, detail};
}

RandomMeshSpec sweep_spec(std::size_t i) {
  static constexpr std::array<double, 3> kFractions = {0.0, 0.25, 0.5};
  RandomMeshSpec spec;
  spec.seed = 0x5eed0000 + i;
  spec.dup_fraction = kFractions[i % 3];
  spec.unused_fraction = kFractions[(i / 3) % 3];
  spec.arity = (i / 9) % 2 == 0 ? 3 : 4;
  spec.dim = 2 + static_cast<std::uint32_t>((i / 18) % 2);
  spec.n_base_vertices = 4 + (i * 37) % 96;
  spec.n_elements = 1 + (i * 53) % 80;
  spec.coord_pool_size = 2 + static_cast<std::uint32_t>(i % 7);
  return spec;
}

Line property_suite() {
  const auto t0 = Clock::now();
  std::size_t failed = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < kPropertyMeshes; ++i) {
    const PropertyReport report = check_all(random_mesh(sweep_spec(i)));
    if (!report.passed()) {
      if (failed++ == 0) first_failure = "mesh " + std::to_string(i) + ": " + report.failures().front();
    }
  }
  const double s = elapsed_ms(t0) / 1000.0;
  const bool ok = failed == 0 && s < kPropertyBudgetS;
  std::string detail = std::to_string(kPropertyMeshes - failed) + "/" +
                       std::to_string(kPropertyMeshes) + " meshes pass all properties in " +
                       fmt(s, 2) + " s (< " + fmt(kPropertyBudgetS, 0) + " s)";
  if (failed > 0) detail += "; first failure " + first_failure;
  return {ok ? Outcome::kPass : Outcome::kFail, detail};
}

bool no_dup_no_unused(const Mesh& m) {
  return testing::brute_force_distinct(m.vertices()) == m.num_vertices() &&
         testing::brute_force_distinct_used(m) == m.num_vertices();
}

Line use_case_laws() {
  const auto t0 = Clock::now();
  std::size_t merge_ok = 0, soup_ok = 0, subset_ok = 0;
  for (std::size_t i = 0; i < kLawInputs; ++i) {
    RandomMeshSpec spec = sweep_spec(i * 7 + 3);
    const Mesh a = random_mesh(spec);
    spec.seed ^= 0xabcdef;
    spec.n_elements = 1 + (spec.n_elements * 3) % 50;
    const Mesh b = random_mesh(spec);

    const std::array<Mesh, 2> parts = {a, b};
    const std::array<ElementSoup, 2> soups = {dereference(a), dereference(b)};
    const Mesh merged = merge(parts);
    if (dereference(merged) == concatenate(soups) && no_dup_no_unused(merged)) ++merge_ok;

    const Mesh rebuilt = soup_to_mesh(soups[0]);
    if (dereference(rebuilt) == soups[0] && no_dup_no_unused(rebuilt)) ++soup_ok;

    std::mt19937_64 rng(spec.seed);
    std::vector<std::uint8_t> mask(a.num_elements());
    for (auto& m : mask) m = static_cast<std::uint8_t>(rng() & 1u);
    ElementSoup expected(a.dim(), a.arity());
    for (std::size_t e = 0; e < mask.size(); ++e) {
      if (!mask[e]) continue;
      const auto el = soups[0].element(e);
      expected.coords().insert(expected.coords().end(), el.begin(), el.end());
    }
    const Mesh part = subset(a, SubsetSelector::from_mask(mask));
    if (dereference(part) == expected && no_dup_no_unused(part)) ++subset_ok;
  }
  const double s = elapsed_ms(t0) / 1000.0;
  const bool ok = merge_ok == kLawInputs && soup_ok == kLawInputs && subset_ok == kLawInputs &&
                  s < kLawBudgetS;
  const std::string n = "/" + std::to_string(kLawInputs);
  return {ok ? Outcome::kPass : Outcome::kFail,
          "merge " + std::to_string(merge_ok) + n + ", soup " + std::to_string(soup_ok) + n +
              ", subset " + std::to_string(subset_ok) + n + " in " + fmt(s, 2) + " s (< " +
              fmt(kLawBudgetS, 0) + " s)"};
}

// Mesh with arbitrary finite bit patterns, including -0, subnormals and extremes.
Mesh finite_noise_mesh(std::uint64_t seed, std::uint32_t dim, std::uint32_t arity) {
  std::mt19937_64 rng(seed);
  const std::size_t nv = 1 + rng() % 64;
  const std::size_t ne = 1 + rng() % 64;
  VertexArray v(dim);
  std::vector<float> p(dim);
  for (std::size_t i = 0; i < nv; ++i) {
    for (auto& c : p) {
      do {
        c = std::bit_cast<float>(static_cast<std::uint32_t>(rng()));
      } while (!std::isfinite(c));
    }
    v.push_back(p);
  }
  std::vector<std::uint32_t> idx(ne * arity);
  for (auto& x : idx) x = static_cast<std::uint32_t>(rng() % nv);
  return Mesh(std::move(v), arity, std::move(idx));
}

Line round_trips() {
  const auto dir = std::filesystem::temp_directory_path() / "remeshx_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::size_t bin_ok = 0, obj_ok = 0;
  for (std::size_t i = 0; i < kRoundTripMeshes; ++i) {
    const Mesh m = i % 2 == 0 ? random_mesh(sweep_spec(i * 11))
                              : finite_noise_mesh(i, 1 + i % 4, 1 + i % 5);
    const auto path = dir / ("m" + std::to_string(i) + ".rmx");
    write_bin(m, path);
    if (read_bin(path) == m && decode_bin(encode_bin(m)) == m) ++bin_ok;

    const Mesh f = finite_noise_mesh(1000 + i, 2 + i % 2, 3 + (i / 2) % 2);
    const auto obj = dir / ("m" + std::to_string(i) + ".obj");
    write_obj(f, obj);
    if (read_obj(obj).mesh == f) ++obj_ok;
  }
  std::filesystem::remove_all(dir);
  const bool ok = bin_ok == kRoundTripMeshes && obj_ok == kRoundTripMeshes;
  const std::string n = "/" + std::to_string(kRoundTripMeshes);
  return {ok ? Outcome::kPass : Outcome::kFail,
          ".rmx bit-identical " + std::to_string(bin_ok) + n + ", OBJ bit-identical " +
              std::to_string(obj_ok) + n};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Line()> run;
  };
  const std::vector<Criterion> criteria = {
      {"worked-example", worked_example}, {"grid-counts", grid_counts},
      {"parallel-speedup", speedup},      {"property-suite", property_suite},
      {"use-case-laws", use_case_laws},   {"io-round-trips", round_trips},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Line line;
    try {
      line = c.run();
    } catch (const std::exception& e) {
      line = {Outcome::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = line.outcome == Outcome::kPass   ? "PASS"
                      : line.outcome == Outcome::kSkip ? "SKIP"
                                                       : "FAIL";
    if (line.outcome == Outcome::kFail) ++failures;
    std::cout << tag << "  " << c.name << ": " << line.detail << std::endl;
  }
  std::cout << (failures == 0 ? "acceptance: ok" : "acceptance: FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
