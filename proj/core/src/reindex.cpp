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

#include "remeshx/reindex.hpp"

#include <tbb/parallel_reduce.h>

#include <algorithm>
#include <atomic>
#include <string>

#include "remeshx/error.hpp"

namespace remeshx {

namespace {

using Range = tbb::blocked_range<std::size_t>;

constexpr std::uint32_t kUnset = 0xffffffffu;

void require_valid(const Mesh& mesh) {
  if (is_valid(mesh)) return;
  const Issue first = validate(mesh).front();
  throw Error(ErrorCode::kInvalidMesh,
              "mesh is not valid: element " + std::to_string(first.element) + " slot " +
                  std::to_string(first.slot) + " references vertex " +
                  std::to_string(first.index) + " of " + std::to_string(mesh.num_vertices()));
}

}  // namespace

FlagArray mark_used(const Mesh& mesh) {
  FlagArray used(mesh.num_vertices(), 0);
  const auto& idx = mesh.indices();
  tbb::parallel_for(Range(0, idx.size()), [&](const Range& r) {
    for (std::size_t i = r.begin(); i != r.end(); ++i) {
      std::atomic_ref<std::uint8_t>(used[idx[i]]).store(1, std::memory_order_relaxed);
    }
  });
  return used;
}

VertexArray overwrite_unused(const VertexArray& vertices, std::span<const std::uint8_t> is_used,
                             std::span<const float> replacement) {
  if (vertices.size() != is_used.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "overwrite_unused: " + std::to_string(vertices.size()) + " vertices but " +
                    std::to_string(is_used.size()) + " flags");
  }
  if (replacement.size() != vertices.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "overwrite_unused: replacement dimension mismatch");
  }
  VertexArray out = vertices;
  tbb::parallel_for(Range(0, out.size()), [&](const Range& r) {
    for (std::size_t i = r.begin(); i != r.end(); ++i) {
      if (!is_used[i]) std::copy(replacement.begin(), replacement.end(), out[i].begin());
    }
  });
  return out;
}

SortPermutation compute_sort_permutation(const VertexArray& vertices) {
  const IndexArray identity = fill_sequence(vertices.size());
  SortedByKey sorted = key_value_sort(vertices, identity);
  return {std::move(sorted.keys), std::move(sorted.values)};
}

FlagArray flag_first_occurrences(const VertexArray& sorted) {
  FlagArray nodup(sorted.size());
  tbb::parallel_for(Range(0, sorted.size()), [&](const Range& r) {
    for (std::size_t i = r.begin(); i != r.end(); ++i) {
      nodup[i] = (i == 0) || !vertex_equal(sorted[i], sorted[i - 1]);
    }
  });
  return nodup;
}

NewIndices compute_new_indices(std::span<const std::uint8_t> nodup) {
  NewIndices out;
  if (nodup.empty()) return out;
  if (!nodup[0]) {
    throw Error(ErrorCode::kInvalidArgument,
                "compute_new_indices: the first sorted vertex must be flagged");
  }
  out.prefix_sum = inclusive_scan(nodup);
  out.new_idx.resize(out.prefix_sum.size());
  tbb::parallel_for(Range(0, out.new_idx.size()), [&](const Range& r) {
    for (std::size_t i = r.begin(); i != r.end(); ++i) out.new_idx[i] = out.prefix_sum[i] - 1;
  });
  out.new_n = std::size_t{out.new_idx.back()} + 1;
  return out;
}

VertexArray compact_vertices(const VertexArray& sorted, std::span<const std::uint8_t> nodup,
                             std::span<const std::uint32_t> new_idx, std::size_t new_n) {
  return scatter(sorted, new_idx, nodup, new_n);
}

IndexArray invert_permutation(std::span<const std::uint32_t> org_id) {
  const std::size_t n = org_id.size();
  IndexArray perm(n, kUnset);
  std::atomic<bool> out_of_range{false};
  tbb::parallel_for(Range(0, n), [&](const Range& r) {
    for (std::size_t i = r.begin(); i != r.end(); ++i) {
      const std::uint32_t target = org_id[i];
      if (target >= n) {
        out_of_range.store(true, std::memory_order_relaxed);
        continue;
      }
      std::atomic_ref<std::uint32_t>(perm[target])
          .store(static_cast<std::uint32_t>(i), std::memory_order_relaxed);
    }
  });
  if (out_of_range.load()) {
    throw Error(ErrorCode::kNotAPermutation,
                "invert_permutation: entry out of range [0, " + std::to_string(n) + ")");
  }
  // n entries in range, so every slot is written exactly once iff none repeat.
  const bool covered = tbb::parallel_reduce(
      Range(0, n), true,
      [&](const Range& r, bool ok) {
        return ok && std::none_of(perm.begin() + static_cast<std::ptrdiff_t>(r.begin()),
                                  perm.begin() + static_cast<std::ptrdiff_t>(r.end()),
                                  [](std::uint32_t p) { return p == kUnset; });
      },
      [](bool a, bool b) { return a && b; });
  if (!covered) {
    throw Error(ErrorCode::kNotAPermutation, "invert_permutation: repeated entry");
  }
  return perm;
}

std::vector<std::uint32_t> remap_elements(std::span<const std::uint32_t> indices,
                                          std::span<const std::uint32_t> perm,
                                          std::span<const std::uint32_t> new_idx) {
  if (perm.size() != new_idx.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "remap_elements: perm has " + std::to_string(perm.size()) +
                    " entries but new_idx has " + std::to_string(new_idx.size()));
  }
  std::vector<std::uint32_t> out(indices.size());
  std::atomic<bool> out_of_range{false};
  tbb::parallel_for(Range(0, indices.size()), [&](const Range& r) {
    for (std::size_t i = r.begin(); i != r.end(); ++i) {
      const std::uint32_t old = indices[i];
      if (old >= perm.size() || perm[old] >= new_idx.size()) {
        out_of_range.store(true, std::memory_order_relaxed);
        continue;
      }
      out[i] = new_idx[perm[old]];
    }
  });
  if (out_of_range.load()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "remap_elements: element index out of range [0, " + std::to_string(perm.size()) +
                    ")");
  }
  return out;
}

ReindexResult reindex(const Mesh& mesh) {
  require_valid(mesh);

  ReindexScratch scratch;
  scratch.is_used = mark_used(mesh);
  if (mesh.num_elements() == 0) {
    // Every vertex is unused and there is no used vertex to overwrite them with.
    return {Mesh(mesh.dim(), mesh.arity()), std::move(scratch)};
  }

  // Step 1: turn unused vertices into duplicates of a used one.
  const std::span<const float> replacement = mesh.vertex(mesh.element(0)[0]);
  const VertexArray cleaned = overwrite_unused(mesh.vertices(), scratch.is_used, replacement);

  // Step 2: sort, flag the first of each run and number the runs.
  SortPermutation sorted = compute_sort_permutation(cleaned);
  scratch.org_id = std::move(sorted.org_id);
  scratch.nodup = flag_first_occurrences(sorted.sorted);
  NewIndices numbering = compute_new_indices(scratch.nodup);
  scratch.prefix_sum = std::move(numbering.prefix_sum);
  scratch.new_idx = std::move(numbering.new_idx);
  scratch.new_n = numbering.new_n;

  // Step 3: compact.
  VertexArray vertices =
      compact_vertices(sorted.sorted, scratch.nodup, scratch.new_idx, scratch.new_n);

  // Step 4: original index -> sorted position -> compacted position.
  scratch.perm = invert_permutation(scratch.org_id);
  std::vector<std::uint32_t> indices =
      remap_elements(mesh.indices(), scratch.perm, scratch.new_idx);

  return {Mesh(std::move(vertices), mesh.arity(), std::move(indices)), std::move(scratch)};
}

}  // namespace remeshx
