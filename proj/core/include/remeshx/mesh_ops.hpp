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
#include <vector>

#include "remeshx/mesh.hpp"

namespace remeshx {

/// Chooses which elements of a mesh to keep, either by ascending unique
/// positions or by a per-element mask. Stored as a mask.
class SubsetSelector {
 public:
  static SubsetSelector from_positions(std::vector<std::size_t> positions,
                                       std::size_t num_elements);
  static SubsetSelector from_mask(std::vector<std::uint8_t> mask);

  static SubsetSelector all(std::size_t num_elements);
  static SubsetSelector none(std::size_t num_elements);

  const std::vector<std::uint8_t>& mask() const noexcept { return mask_; }
  std::size_t num_elements() const noexcept { return mask_.size(); }
  std::size_t count() const noexcept;

 private:
  explicit SubsetSelector(std::vector<std::uint8_t> mask) : mask_(std::move(mask)) {}
  std::vector<std::uint8_t> mask_;
};

/// Concatenates the meshes (offsetting each mesh's indices by the vertex count
/// of the meshes before it) and reindexes the result. All meshes must share
/// dimension and arity.
Mesh merge(std::span<const Mesh> meshes);

/// Builds the trivial indexed mesh [v0, v1, ...] / [(0..K-1), (K..2K-1), ...]
/// from a soup and reindexes it.
Mesh soup_to_mesh(const ElementSoup& soup);

/// Keeps the selected elements, in their original relative order, over a copy
/// of the full vertex array, then reindexes to drop what became unused.
Mesh subset(const Mesh& mesh, const SubsetSelector& selector);

}  // namespace remeshx
