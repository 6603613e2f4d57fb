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

#include "remeshx/serial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "remeshx/detail/fixed_dim.hpp"
#include "remeshx/error.hpp"

namespace remeshx {

namespace {

template <typename Key, typename MakeKey>
Mesh reindex_with_map(const Mesh& mesh, MakeKey make_key) {
  std::map<Key, std::uint32_t> already_inserted;
  VertexArray vertices(mesh.dim());
  std::vector<std::uint32_t> indices;
  indices.reserve(mesh.indices().size());
  for (const std::uint32_t old : mesh.indices()) {
    const auto v = mesh.vertex(old);
    auto [it, inserted] =
        already_inserted.try_emplace(make_key(v), static_cast<std::uint32_t>(vertices.size()));
    if (inserted) vertices.push_back(v);
    indices.push_back(it->second);
  }
  return Mesh(std::move(vertices), mesh.arity(), std::move(indices));
}

std::vector<std::uint32_t> generic_key(std::span<const float> v) {
  std::vector<std::uint32_t> key(v.size());
  std::transform(v.begin(), v.end(), key.begin(), float_bits);
  return key;
}

// Indices of the vertex array in bitwise-sorted order.
std::vector<std::size_t> sorted_vertex_order(const VertexArray& vertices) {
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vertex_less(vertices[a], vertices[b]);
  });
  return order;
}

}  // namespace

Mesh reindex_serial(const Mesh& mesh) {
  const auto& idx = mesh.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= mesh.num_vertices()) {
      throw Error(ErrorCode::kInvalidMesh,
                  "mesh is not valid: element " + std::to_string(i / mesh.arity()) +
                      " references vertex " + std::to_string(idx[i]));
    }
  }
  Mesh out;
  if (!detail::with_fixed_dim(mesh.dim(), [&]<std::size_t D>() {
        out = reindex_with_map<detail::VertexBits<D>>(mesh, detail::vertex_bits<D>);
      })) {
    out = reindex_with_map<std::vector<std::uint32_t>>(mesh, generic_key);
  }
  return out;
}

bool equivalent(const Mesh& a, const Mesh& b) {
  if (a.dim() != b.dim() || a.arity() != b.arity()) return false;
  if (a.num_vertices() != b.num_vertices() || a.num_elements() != b.num_elements()) return false;
  if (!is_valid(a) || !is_valid(b)) return false;
  if (!(dereference(a) == dereference(b))) return false;

  const auto order_a = sorted_vertex_order(a.vertices());
  const auto order_b = sorted_vertex_order(b.vertices());
  for (std::size_t i = 0; i < order_a.size(); ++i) {
    if (!vertex_equal(a.vertex(order_a[i]), b.vertex(order_b[i]))) return false;
  }
  return true;
}

}  // namespace remeshx
