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

#include "remeshx/mesh.hpp"

namespace remeshx {

/// Single-threaded map-based reindexing.
///
/// Walks elements in order and slots within each element in order. The first
/// time a (bitwise) vertex value is seen it is appended to the output and
/// remembered; later occurrences reuse the remembered index. Output vertices
/// are therefore in first-use order, and unreferenced vertices never appear.
Mesh reindex_serial(const Mesh& mesh);

/// True iff both meshes dereference to bitwise-identical soups and hold the
/// same vertices as multisets. Vertex order is not compared.
bool equivalent(const Mesh& a, const Mesh& b);

}  // namespace remeshx
