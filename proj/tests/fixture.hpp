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

#include <algorithm>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "remeshx/mesh.hpp"

namespace remeshx::testing {

// Letter -> coordinate assignment for the ten-vertex example. Any injective
// assignment ordered A < B < ... < F works; this one is frozen.
inline const std::map<char, std::vector<float>>& letters() {
  static const std::map<char, std::vector<float>> table = {
      {'A', {0, 0}}, {'B', {0, 1}}, {'C', {0, 2}}, {'D', {0, 3}}, {'E', {0, 4}},
      {'F', {0, 5}}, {'X', {9, 9}}, {'Y', {8, 8}},
  };
  return table;
}

inline VertexArray vertices_of(const std::string& names) {
  VertexArray v(2);
  for (const char c : names) v.push_back(letters().at(c));
  return v;
}

// vtx = {A,B,C',X,D',C",E,F,Y,D"}, idx = {(0,1,2)(0,2,4)(5,6,7)(5,7,9)}
inline Mesh worked_mesh() {
  return Mesh(vertices_of("ABCXDCEFYD"), 3, {0, 1, 2, 0, 2, 4, 5, 6, 7, 5, 7, 9});
}

inline std::vector<std::uint32_t> to_u32(const std::vector<std::uint8_t>& v) {
  return {v.begin(), v.end()};
}

// Independent O(n^2) count of bitwise-distinct vertices.
inline std::size_t brute_force_distinct(const VertexArray& v) {
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i && !seen; ++j) {
      seen = std::memcmp(v[i].data(), v[j].data(), v.dim() * sizeof(float)) == 0;
    }
    if (!seen) ++distinct;
  }
  return distinct;
}

// Distinct vertices among those referenced by some element.
inline std::size_t brute_force_distinct_used(const Mesh& m) {
  VertexArray used(m.dim());
  std::vector<bool> flag(m.num_vertices(), false);
  for (const auto i : m.indices()) flag[i] = true;
  for (std::size_t i = 0; i < flag.size(); ++i) {
    if (flag[i]) used.push_back(m.vertex(i));
  }
  return brute_force_distinct(used);
}

}  // namespace remeshx::testing
