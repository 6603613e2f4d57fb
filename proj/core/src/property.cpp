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

#include "remeshx/property.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <string>

#include "remeshx/error.hpp"
#include "remeshx/mesh_ops.hpp"
#include "remeshx/parallel.hpp"
#include "remeshx/serial.hpp"

namespace remeshx {

Mesh random_mesh(const RandomMeshSpec& spec) {
  auto in_unit = [](double f) { return f >= 0.0 && f <= 1.0; };
  if (!in_unit(spec.dup_fraction) || !in_unit(spec.unused_fraction)) {
    throw Error(ErrorCode::kInvalidArgument, "random_mesh: fractions must lie in [0, 1]");
  }
  if (spec.coord_pool_size == 0 || spec.dim == 0 || spec.arity == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "random_mesh: pool size, dimension and arity must be positive");
  }

  std::mt19937_64 rng(spec.seed);
  const auto pool = static_cast<std::int64_t>(spec.coord_pool_size);
  std::uniform_int_distribution<std::int64_t> lattice(-(pool / 2), pool - pool / 2 - 1);
  std::bernoulli_distribution negative_zero(0.25);

  auto draw_vertex = [&](VertexArray& out) {
    std::vector<float> v(spec.dim);
    for (auto& c : v) {
      c = static_cast<float>(lattice(rng));
      if (c == 0.0f && negative_zero(rng)) c = -0.0f;
    }
    out.push_back(v);
  };

  const std::size_t n_base = spec.n_base_vertices;
  const auto n_dup = static_cast<std::size_t>(std::llround(spec.dup_fraction * double(n_base)));
  const auto n_unused =
      static_cast<std::size_t>(std::llround(spec.unused_fraction * double(n_base)));

  VertexArray vertices(spec.dim);
  vertices.reserve(n_base + n_dup + n_unused);
  for (std::size_t i = 0; i < n_base; ++i) draw_vertex(vertices);
  if (n_base > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, n_base - 1);
    for (std::size_t i = 0; i < n_dup; ++i) {
      const auto src = vertices[pick(rng)];
      const std::vector<float> copy(src.begin(), src.end());
      vertices.push_back(copy);
    }
  }
  const std::size_t n_referenced = vertices.size();
  for (std::size_t i = 0; i < n_unused; ++i) draw_vertex(vertices);

  std::vector<std::uint32_t> indices;
  if (n_referenced > 0) {
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(n_referenced - 1));
    indices.resize(spec.n_elements * spec.arity);
    for (auto& i : indices) i = pick(rng);
  }

  // Shuffle vertex positions so that duplicates and unused vertices are spread out.
  std::vector<std::uint32_t> new_pos(vertices.size());
  std::iota(new_pos.begin(), new_pos.end(), 0u);
  std::shuffle(new_pos.begin(), new_pos.end(), rng);
  VertexArray shuffled(spec.dim);
  shuffled.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::copy(vertices[i].begin(), vertices[i].end(), shuffled[new_pos[i]].begin());
  }
  for (auto& i : indices) i = new_pos[i];
  return Mesh(std::move(shuffled), spec.arity, std::move(indices));
}

bool PropertyReport::passed() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

const PropertyResult* PropertyReport::find(const std::string& name) const noexcept {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::vector<std::string> PropertyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results) {
    if (!r.passed) out.push_back(r.name + (r.detail.empty() ? "" : ": " + r.detail));
  }
  return out;
}

namespace {

// A check returns an empty string on success, otherwise what went wrong.
template <typename Check>
void run(PropertyReport& report, std::string name, Check&& check) {
  PropertyResult result{std::move(name), false, {}};
  try {
    result.detail = check();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("threw: ") + e.what();
  }
  report.results.push_back(std::move(result));
}

std::string check_no_duplicates(const Mesh& m) {
  std::vector<std::size_t> order(m.num_vertices());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vertex_less(m.vertex(a), m.vertex(b)); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (vertex_equal(m.vertex(order[i]), m.vertex(order[i - 1]))) {
      return "vertices " + std::to_string(order[i - 1]) + " and " + std::to_string(order[i]) +
             " are equal";
    }
  }
  return {};
}

std::vector<bool> used_flags(const Mesh& m) {
  std::vector<bool> used(m.num_vertices(), false);
  for (const std::uint32_t i : m.indices()) used[i] = true;
  return used;
}

std::string check_full_usage(const Mesh& m) {
  if (m.num_elements() == 0) {
    return m.num_vertices() == 0 ? "" : "element-free output still has vertices";
  }
  const auto used = used_flags(m);
  const auto it = std::find(used.begin(), used.end(), false);
  if (it != used.end()) return "vertex " + std::to_string(it - used.begin()) + " is unused";
  return {};
}

std::string check_canonical_order(const Mesh& m) {
  for (std::size_t i = 1; i < m.num_vertices(); ++i) {
    if (!vertex_less(m.vertex(i - 1), m.vertex(i))) {
      return "vertex " + std::to_string(i) + " is not above its predecessor";
    }
  }
  return {};
}

std::string check_output_shape(const Mesh& m) {
  if (auto s = check_no_duplicates(m); !s.empty()) return s;
  if (auto s = check_full_usage(m); !s.empty()) return s;
  return check_canonical_order(m);
}

std::size_t count_distinct(const VertexArray& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vertex_less(v[a], v[b]); });
  std::size_t distinct = order.empty() ? 0 : 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!vertex_equal(v[order[i]], v[order[i - 1]])) ++distinct;
  }
  return distinct;
}

bool scratch_equal(const ReindexScratch& a, const ReindexScratch& b) {
  return a.is_used == b.is_used && a.org_id == b.org_id && a.nodup == b.nodup &&
         a.prefix_sum == b.prefix_sum && a.new_idx == b.new_idx && a.perm == b.perm &&
         a.new_n == b.new_n;
}

std::string check_scratch(const Mesh& input, const ReindexResult& result) {
  const ReindexScratch& s = result.scratch;
  const auto used = used_flags(input);
  if (s.is_used.size() != used.size()) return "is_used has the wrong length";
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (bool(s.is_used[v]) != used[v]) return "is_used wrong at " + std::to_string(v);
  }
  if (input.num_elements() == 0) {
    return s.org_id.empty() && s.perm.empty() && s.new_n == 0 ? "" : "element-free scratch not empty";
  }

  const std::size_t n = input.num_vertices();
  if (s.org_id.size() != n || s.perm.size() != n || s.nodup.size() != n ||
      s.new_idx.size() != n || s.prefix_sum.size() != n) {
    return "scratch arrays do not have one entry per vertex";
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (s.org_id[j] >= n || s.perm[s.org_id[j]] != j) {
      return "perm is not the inverse of org_id at " + std::to_string(j);
    }
  }
  if (!s.nodup[0]) return "nodup[0] is not set";
  if (s.new_idx[0] != 0) return "new_idx[0] is not 0";
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < n; ++i) {
    flagged += s.nodup[i] ? 1 : 0;
    if (s.prefix_sum[i] != s.new_idx[i] + 1) return "new_idx != prefix_sum - 1";
    if (i > 0) {
      const std::uint32_t step = s.new_idx[i] - s.new_idx[i - 1];
      if (step != (s.nodup[i] ? 1u : 0u)) {
        return "new_idx does not step exactly at nodup flags (i = " + std::to_string(i) + ")";
      }
    }
  }
  if (std::size_t{s.new_idx.back()} + 1 != s.new_n || flagged != s.new_n ||
      s.new_n != result.mesh.num_vertices()) {
    return "new_n disagrees with new_idx, nodup or the output vertex count";
  }
  return {};
}

// Rebuilds the sorted array from the scratch and compacts it without the nodup
// mask, serially. Colliding writes carry equal values, so the result must match.
std::string check_unmasked_compaction(const Mesh& input, const ReindexResult& result) {
  const ReindexScratch& s = result.scratch;
  if (input.num_elements() == 0) return {};
  const auto replacement = input.vertex(input.element(0)[0]);
  VertexArray compacted(input.dim());
  compacted.resize(s.new_n);
  for (std::size_t i = 0; i < s.org_id.size(); ++i) {
    const std::uint32_t src = s.org_id[i];
    const auto v = s.is_used[src] ? input.vertex(src) : replacement;
    std::copy(v.begin(), v.end(), compacted[s.new_idx[i]].begin());
  }
  return compacted == result.mesh.vertices() ? "" : "unmasked compaction differs";
}

}  // namespace

PropertyReport check_reindexed(const Mesh& input, const ReindexResult& result) {
  PropertyReport report;
  const Mesh& out = result.mesh;

  run(report, "soup_preservation", [&]() -> std::string {
    return dereference(out) == dereference(input) ? "" : "dereferenced soups differ";
  });
  run(report, "no_duplicates", [&] { return check_no_duplicates(out); });
  run(report, "full_usage", [&] { return check_full_usage(out); });
  run(report, "size_bounds", [&]() -> std::string {
    if (out.num_vertices() > input.num_vertices()) return "output has more vertices than input";
    const auto used = used_flags(input);
    const bool compact_input = count_distinct(input.vertices()) == input.num_vertices() &&
                               std::all_of(used.begin(), used.end(), [](bool u) { return u; });
    const bool same_size = out.num_vertices() == input.num_vertices();
    if (same_size != compact_input) return "vertex count equality does not match input compactness";
    if (out.num_elements() != input.num_elements() || out.arity() != input.arity()) {
      return "element count or arity changed";
    }
    return {};
  });
  run(report, "canonical_order", [&] { return check_canonical_order(out); });
  run(report, "oracle_equivalence", [&]() -> std::string {
    return equivalent(out, reindex_serial(input)) ? "" : "differs from the serial oracle";
  });
  run(report, "idempotence", [&]() -> std::string {
    return reindex(out).mesh == out ? "" : "second reindex changed the mesh";
  });
  run(report, "scratch_coherence", [&] { return check_scratch(input, result); });
  run(report, "unmasked_compaction", [&] { return check_unmasked_compaction(input, result); });
  return report;
}

PropertyReport check_all(const Mesh& mesh) {
  const ReindexResult result = reindex(mesh);
  PropertyReport report = check_reindexed(mesh, result);

  run(report, "determinism", [&]() -> std::string {
    for (const unsigned workers : {1u, hardware_worker_count()}) {
      ScopedWorkerCount scope(workers);
      const ReindexResult again = reindex(mesh);
      if (!(again.mesh == result.mesh) || !scratch_equal(again.scratch, result.scratch)) {
        return "output differs with " + std::to_string(workers) + " workers";
      }
    }
    return {};
  });

  const Mesh serial = reindex_serial(mesh);
  run(report, "serial_no_duplicates_no_unused", [&]() -> std::string {
    if (auto s = check_no_duplicates(serial); !s.empty()) return s;
    return check_full_usage(serial);
  });
  run(report, "serial_idempotence", [&]() -> std::string {
    return reindex_serial(serial) == serial ? "" : "second serial pass changed the mesh";
  });

  const ElementSoup soup = dereference(mesh);
  run(report, "merge_single", [&]() -> std::string {
    return merge(std::span<const Mesh>(&mesh, 1)) == result.mesh ? "" : "merge([m]) != reindex(m)";
  });
  run(report, "merge_concatenation_law", [&]() -> std::string {
    const Mesh shifted = random_mesh({.seed = mesh.num_vertices() * 7919 + mesh.num_elements(),
                                      .n_base_vertices = 12,
                                      .n_elements = 6,
                                      .arity = mesh.arity(),
                                      .dim = mesh.dim()});
    const std::vector<Mesh> parts = {mesh, shifted, mesh};
    const Mesh merged = merge(parts);
    const std::vector<ElementSoup> soups = {soup, dereference(shifted), soup};
    if (!(dereference(merged) == concatenate(soups))) return "soup is not the concatenation";
    return check_output_shape(merged);
  });
  run(report, "soup_round_trip", [&]() -> std::string {
    const Mesh rebuilt = soup_to_mesh(soup);
    if (!(dereference(rebuilt) == soup)) return "dereference(soup_to_mesh(s)) != s";
    return check_output_shape(rebuilt);
  });
  run(report, "subset_law", [&]() -> std::string {
    std::vector<std::uint8_t> mask(mesh.num_elements());
    std::vector<float> expected;
    for (std::size_t e = 0; e < mask.size(); ++e) {
      mask[e] = (e % 3 != 1) ? 1 : 0;
      if (mask[e]) {
        const auto el = soup.element(e);
        expected.insert(expected.end(), el.begin(), el.end());
      }
    }
    const Mesh part = subset(mesh, SubsetSelector::from_mask(mask));
    if (!(dereference(part) == ElementSoup(mesh.dim(), mesh.arity(), std::move(expected)))) {
      return "subset soup is not the selected sub-soup";
    }
    return check_output_shape(part);
  });
  return report;
}

}  // namespace remeshx
