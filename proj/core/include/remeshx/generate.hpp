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

#include "remeshx/mesh.hpp"

namespace remeshx {

/// A regular n x n grid of quads in 2D where no vertex is shared.
///
/// Quad (i, j) (row-major, j outer) stores its own corners
/// (i, j), (i+1, j), (i+1, j+1), (i, j+1) followed by an unreferenced center
/// vertex at (i + 0.5, j + 0.5), so the mesh has 5 n^2 vertices of which
/// (n + 1)^2 are distinct among the used ones.
Mesh grid_quads(std::size_t n);

}  // namespace remeshx
