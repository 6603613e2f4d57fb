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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "remeshx/mesh.hpp"

namespace remeshx {

enum class MeshFormat { kObj, kBin };

/// ".obj" -> kObj, ".rmx" -> kBin (case-insensitive); anything else throws
/// kInvalidArgument.
MeshFormat format_from_path(const std::filesystem::path& path);

std::optional<MeshFormat> parse_format(std::string_view name);

// ---------------------------------------------------------------------------
// Wavefront OBJ

/// A contiguous run of elements introduced by a `g`, `o` or `usemtl` line.
struct ElementGroup {
  std::string kind;  // "g", "o" or "usemtl"
  std::string name;
  std::size_t first = 0;
  std::size_t count = 0;
};

struct MeshDocument {
  Mesh mesh;
  std::vector<ElementGroup> groups;
};

struct ObjReadOptions {
  /// 2 drops z, 3 fills a missing z with 0. Unset: 3 if any vertex has a z
  /// component, otherwise 2.
  std::optional<std::uint32_t> dim;
};

/// Parses `v` and `f` lines. Face corners may be `a`, `a/b`, `a//c` or
/// `a/b/c`; only the vertex index is used. Negative indices count back from
/// the vertices read so far. All faces must have the same arity, 3 or 4.
/// Other directives are ignored. Errors carry the line number.
MeshDocument parse_obj(std::istream& in, const ObjReadOptions& options = {});
MeshDocument read_obj(const std::filesystem::path& path, const ObjReadOptions& options = {});

/// Writes `v` lines with the shortest decimal form that reads back to the same
/// float, then 1-based `f` lines. Requires dim 2 or 3 and arity 3 or 4.
void write_obj(const Mesh& mesh, std::ostream& out);
void write_obj(const Mesh& mesh, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Binary .rmx, little-endian:
//   "RMX1" | u32 dim | u32 arity | u64 vertex count | u64 element count |
//   vertices (dim x f32 each) | elements (arity x u32 each)

inline constexpr std::size_t kBinHeaderSize = 28;

std::vector<std::byte> encode_bin(const Mesh& mesh);
Mesh decode_bin(std::span<const std::byte> bytes);

Mesh read_bin(const std::filesystem::path& path);
void write_bin(const Mesh& mesh, const std::filesystem::path& path);

// ---------------------------------------------------------------------------

/// Reads either format, inferring it from the extension unless given.
MeshDocument read_mesh(const std::filesystem::path& path,
                       std::optional<MeshFormat> format = std::nullopt,
                       const ObjReadOptions& options = {});

void write_mesh(const Mesh& mesh, const std::filesystem::path& path,
                std::optional<MeshFormat> format = std::nullopt);

}  // namespace remeshx
