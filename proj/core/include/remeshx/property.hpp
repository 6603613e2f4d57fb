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
#include <string>
#include <vector>

#include "remeshx/mesh.hpp"
#include "remeshx/reindex.hpp"

namespace remeshx {

/// Parameters of a seeded random mesh. Coordinates are drawn from a small
/// integer lattice so that exact duplicates occur naturally.
struct RandomMeshSpec {
  std::uint64_t seed = 0;
  std::size_t n_base_vertices = 32;
  std::size_t n_elements = 32;
  std::uint32_t arity = 3;
  std::uint32_t dim = 2;
  double dup_fraction = 0.25;     // extra copies of base vertices, relative to the base count
  double unused_fraction = 0.25;  // unreferenced vertices, relative to the base count
  std::uint32_t coord_pool_size = 8;
};

/// Same spec -> bit-identical mesh. Vertex order is shuffled so duplicates and
/// unused vertices are interleaved with the rest.
Mesh random_mesh(const RandomMeshSpec& spec);

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  bool passed() const noexcept;
  const PropertyResult* find(const std::string& name) const noexcept;
  std::vector<std::string> failures() const;
};

/// Checks a reindex() result against its input: soup preservation, no
/// duplicates, full usage, size bounds, canonical order, oracle equivalence,
/// idempotence, scratch coherence and masked/unmasked compaction agreement.
PropertyReport check_reindexed(const Mesh& input, const ReindexResult& result);

/// Runs reindex() on the mesh and every property of check_reindexed(), plus
/// worker-count determinism, the serial oracle's own invariants and the
/// merge / soup / subset laws.
PropertyReport check_all(const Mesh& mesh);

}  // namespace remeshx
