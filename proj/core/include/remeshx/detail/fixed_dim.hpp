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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "remeshx/mesh.hpp"

namespace remeshx::detail {

inline constexpr std::uint32_t kMaxFixedDim = 4;

/// Bit pattern of a D-dimensional vertex. Lexicographic comparison of the
/// array matches compare_vertices().
template <std::size_t D>
using VertexBits = std::array<std::uint32_t, D>;

template <std::size_t D>
VertexBits<D> vertex_bits(std::span<const float> v) noexcept {
  VertexBits<D> bits;
  for (std::size_t c = 0; c < D; ++c) bits[c] = float_bits(v[c]);
  return bits;
}

/// Calls fn.template operator()<D>() for dim in [1, kMaxFixedDim] and returns
/// true; returns false without calling fn otherwise.
template <typename Fn>
bool with_fixed_dim(std::uint32_t dim, Fn&& fn) {
  switch (dim) {
    case 1: fn.template operator()<1>(); return true;
    case 2: fn.template operator()<2>(); return true;
    case 3: fn.template operator()<3>(); return true;
    case 4: fn.template operator()<4>(); return true;
    default: return false;
  }
}

}  // namespace remeshx::detail
