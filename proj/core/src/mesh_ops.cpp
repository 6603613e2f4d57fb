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

#include "remeshx/mesh_ops.hpp"

#include <algorithm>
#include <string>

#include "remeshx/error.hpp"
#include "remeshx/parallel.hpp"
#include "remeshx/reindex.hpp"

namespace remeshx {

SubsetSelector SubsetSelector::from_positions(std::vector<std::size_t> positions,
                                              std::size_t num_elements) {
  std::vector<std::uint8_t> mask(num_elements, 0);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= num_elements) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "subset: position " + std::to_string(positions[i]) + " but the mesh has " +
                      std::to_string(num_elements) + " elements");
    }
    if (i > 0 && positions[i] <= positions[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "subset: positions must be ascending and unique");
    }
    mask[positions[i]] = 1;
  }
  return SubsetSelector(std::move(mask));
}

SubsetSelector SubsetSelector::from_mask(std::vector<std::uint8_t> mask) {
  for (auto& m : mask) m = m ? 1 : 0;
  return SubsetSelector(std::move(mask));
}

SubsetSelector SubsetSelector::all(std::size_t num_elements) {
  return SubsetSelector(std::vector<std::uint8_t>(num_elements, 1));
}

SubsetSelector SubsetSelector::none(std::size_t num_elements) {
  return SubsetSelector(std::vector<std::uint8_t>(num_elements, 0));
}

std::size_t SubsetSelector::count() const noexcept {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{1}));
}

Mesh merge(std::span<const Mesh> meshes) {
  if (meshes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "merge: no meshes given");
  }
  const std::uint32_t dim = meshes.front().dim();
  const std::uint32_t arity = meshes.front().arity();
  std::uint64_t total_vertices = 0;
  std::size_t total_indices = 0;
  for (std::size_t m = 0; m < meshes.size(); ++m) {
    if (meshes[m].dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "merge: mesh " + std::to_string(m) + " has dimension " +
                      std::to_string(meshes[m].dim()) + ", expected " + std::to_string(dim));
    }
    if (meshes[m].arity() != arity) {
      throw Error(ErrorCode::kArityMismatch,
                  "merge: mesh " + std::to_string(m) + " has arity " +
                      std::to_string(meshes[m].arity()) + ", expected " + std::to_string(arity));
    }
    total_vertices += meshes[m].num_vertices();
    total_indices += meshes[m].indices().size();
  }
  if (total_vertices > kMaxVertices) {
    throw Error(ErrorCode::kIndexOverflow,
                "merge: " + std::to_string(total_vertices) +
                    " vertices in total exceed the 32-bit index range");
  }

  std::vector<float> coords;
  coords.reserve(total_vertices * dim);
  std::vector<std::uint32_t> indices(total_indices);
  std::size_t index_offset = 0;
  std::uint32_t vertex_offset = 0;
  for (const Mesh& m : meshes) {
    const auto& src = m.vertices().coords();
    coords.insert(coords.end(), src.begin(), src.end());
    const auto& idx = m.indices();
    tbb::parallel_for(tbb::blocked_range<std::size_t>(0, idx.size()),
                      [&](const tbb::blocked_range<std::size_t>& r) {
                        for (std::size_t i = r.begin(); i != r.end(); ++i) {
                          indices[index_offset + i] = idx[i] + vertex_offset;
                        }
                      });
    index_offset += idx.size();
    vertex_offset += static_cast<std::uint32_t>(m.num_vertices());
  }
  return reindex(Mesh(VertexArray(dim, std::move(coords)), arity, std::move(indices))).mesh;
}

Mesh soup_to_mesh(const ElementSoup& soup) {
  const std::size_t n = soup.size() * soup.arity();
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kIndexOverflow, "soup_to_mesh: soup too large for 32-bit indices");
  }
  Mesh dummy(VertexArray(soup.dim(), soup.coords()), soup.arity(), fill_sequence(n));
  return reindex(dummy).mesh;
}

Mesh subset(const Mesh& mesh, const SubsetSelector& selector) {
  if (selector.num_elements() != mesh.num_elements()) {
    throw Error(ErrorCode::kLengthMismatch,
                "subset: selector covers " + std::to_string(selector.num_elements()) +
                    " elements but the mesh has " + std::to_string(mesh.num_elements()));
  }
  const std::uint32_t k = mesh.arity();
  const auto& mask = selector.mask();

  // Destination of each kept element via a scan over the mask.
  const IndexArray dest = inclusive_scan(std::span<const std::uint8_t>(mask));
  const std::size_t kept = dest.empty() ? 0 : dest.back();
  std::vector<std::uint32_t> indices(kept * k);
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, mask.size()),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t e = r.begin(); e != r.end(); ++e) {
                        if (!mask[e]) continue;
                        const auto src = mesh.element(e);
                        std::copy(src.begin(), src.end(),
                                  indices.begin() + static_cast<std::ptrdiff_t>((dest[e] - 1) * k));
                      }
                    });
  return reindex(Mesh(mesh.vertices(), k, std::move(indices))).mesh;
}

}  // namespace remeshx
