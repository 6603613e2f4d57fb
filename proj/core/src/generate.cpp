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

#include "remeshx/generate.hpp"

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

#include <string>
#include <vector>

#include "remeshx/error.hpp"

namespace remeshx {

Mesh grid_quads(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "grid_quads: n must be at least 1");
  // 5 n^2 must fit in 32-bit indices.
  if (n > 29308) {
    throw Error(ErrorCode::kIndexOverflow,
                "grid_quads: n = " + std::to_string(n) + " needs more than 2^32 vertices");
  }
  constexpr std::size_t kVertsPerQuad = 5;
  constexpr std::size_t kDim = 2;
  const std::size_t quads = n * n;
  std::vector<float> coords(quads * kVertsPerQuad * kDim);
  std::vector<std::uint32_t> indices(quads * 4);

  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, quads),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t q = r.begin(); q != r.end(); ++q) {
                        const auto i = static_cast<float>(q % n);
                        const auto j = static_cast<float>(q / n);
                        const float corners[kVertsPerQuad][kDim] = {
                            {i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}, {i + 0.5f, j + 0.5f}};
                        float* dst = coords.data() + q * kVertsPerQuad * kDim;
                        for (const auto& c : corners) {
                          *dst++ = c[0];
                          *dst++ = c[1];
                        }
                        const auto base = static_cast<std::uint32_t>(q * kVertsPerQuad);
                        for (std::uint32_t k = 0; k < 4; ++k) indices[q * 4 + k] = base + k;
                      }
                    });
  return Mesh(VertexArray(kDim, std::move(coords)), 4, std::move(indices));
}

}  // namespace remeshx
