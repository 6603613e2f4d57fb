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
#include <cstdint>
#include <span>

#include "remeshx/mesh.hpp"
#include "remeshx/parallel.hpp"

namespace remeshx {

/// Intermediate arrays of one reindex() run, kept for inspection.
///
/// Invariants for a mesh with n vertices and at least one element:
///  - org_id is a permutation of [0, n) and perm is its inverse;
///  - nodup[0] is set, new_idx is non-decreasing and steps by one exactly
///    where nodup is set;
///  - new_idx.back() + 1 == new_n == number of set nodup flags.
struct ReindexScratch {
  FlagArray is_used;     // per input vertex
  IndexArray org_id;     // per sorted vertex: its position before sorting
  FlagArray nodup;       // per sorted vertex: first of its run of equal keys
  IndexArray prefix_sum; // inclusive scan of nodup
  IndexArray new_idx;    // prefix_sum - 1
  IndexArray perm;       // per input vertex: its position after sorting
  std::size_t new_n = 0;
};

struct ReindexResult {
  Mesh mesh;
  ReindexScratch scratch;
};

/// is_used[v] is set iff some element references v.
FlagArray mark_used(const Mesh& mesh);

/// Copies `vertices`, replacing every vertex whose flag is clear with
/// `replacement`.
VertexArray overwrite_unused(const VertexArray& vertices, std::span<const std::uint8_t> is_used,
                             std::span<const float> replacement);

struct SortPermutation {
  VertexArray sorted;
  IndexArray org_id;
};

/// Stable key-value sort of the vertices against the identity sequence.
SortPermutation compute_sort_permutation(const VertexArray& vertices);

/// nodup[i] = (i == 0) || sorted[i] != sorted[i - 1], bitwise.
FlagArray flag_first_occurrences(const VertexArray& sorted);

struct NewIndices {
  IndexArray prefix_sum;
  IndexArray new_idx;
  std::size_t new_n = 0;
};

NewIndices compute_new_indices(std::span<const std::uint8_t> nodup);

/// Scatters each first occurrence to new_vertices[new_idx[i]].
VertexArray compact_vertices(const VertexArray& sorted, std::span<const std::uint8_t> nodup,
                             std::span<const std::uint32_t> new_idx, std::size_t new_n);

/// perm[org_id[i]] = i. Throws kNotAPermutation if org_id repeats or skips an
/// entry.
IndexArray invert_permutation(std::span<const std::uint32_t> org_id);

/// Rewrites every index i in a flat element array as new_idx[perm[i]].
std::vector<std::uint32_t> remap_elements(std::span<const std::uint32_t> indices,
                                          std::span<const std::uint32_t> perm,
                                          std::span<const std::uint32_t> new_idx);

/// Removes bitwise-duplicate and unused vertices.
///
/// The output has the same elements (as vertex values) in the same order, and
/// its vertices appear in bitwise-sorted order. A mesh with no elements
/// reindexes to an empty mesh. Throws kInvalidMesh if validate() reports
/// issues.
ReindexResult reindex(const Mesh& mesh);

}  // namespace remeshx
