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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace remeshx {

/// Largest vertex count an index array can address with 32-bit indices.
inline constexpr std::uint64_t kMaxVertices =
    std::numeric_limits<std::uint32_t>::max();

inline std::uint32_t float_bits(float f) noexcept {
  return std::bit_cast<std::uint32_t>(f);
}

/// Orders two vertices by the raw bit patterns of their coordinates, read as
/// unsigned integers, lexicographically by component. Returns <0, 0 or >0.
///
/// This is a total order: -0.0 and +0.0 are different vertices, and two NaNs
/// compare equal only if their payloads match.
int compare_vertices(std::span<const float> a, std::span<const float> b) noexcept;

inline bool vertex_less(std::span<const float> a, std::span<const float> b) noexcept {
  return compare_vertices(a, b) < 0;
}

inline bool vertex_equal(std::span<const float> a, std::span<const float> b) noexcept {
  return compare_vertices(a, b) == 0;
}

/// A contiguous array of fixed-dimension float vertices.
class VertexArray {
 public:
  explicit VertexArray(std::uint32_t dim = 2);
  VertexArray(std::uint32_t dim, std::vector<float> coords);

  std::uint32_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const float> operator[](std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<float> operator[](std::size_t i) noexcept {
    return {coords_.data() + i * dim_, dim_};
  }

  void push_back(std::span<const float> v);
  void resize(std::size_t n) { coords_.resize(n * dim_); }
  void reserve(std::size_t n) { coords_.reserve(n * dim_); }

  const std::vector<float>& coords() const noexcept { return coords_; }
  std::vector<float>& coords() noexcept { return coords_; }

  /// Bitwise equality of every coordinate.
  friend bool operator==(const VertexArray& a, const VertexArray& b) noexcept;

 private:
  std::uint32_t dim_;
  std::vector<float> coords_;
};

/// An indexed mesh: a vertex array plus a flat array of fixed-arity elements.
/// Element e occupies indices()[e * arity() .. (e + 1) * arity()).
///
/// Construction checks shapes only; index ranges are checked by validate().
/// Meshes are immutable once built.
class Mesh {
 public:
  explicit Mesh(std::uint32_t dim = 2, std::uint32_t arity = 3);
  Mesh(VertexArray vertices, std::uint32_t arity, std::vector<std::uint32_t> indices);

  std::uint32_t dim() const noexcept { return vertices_.dim(); }
  std::uint32_t arity() const noexcept { return arity_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_elements() const noexcept { return indices_.size() / arity_; }
  bool empty() const noexcept { return vertices_.empty() && indices_.empty(); }

  const VertexArray& vertices() const noexcept { return vertices_; }
  std::span<const float> vertex(std::size_t i) const noexcept { return vertices_[i]; }

  const std::vector<std::uint32_t>& indices() const noexcept { return indices_; }
  std::span<const std::uint32_t> element(std::size_t e) const noexcept {
    return {indices_.data() + e * arity_, arity_};
  }

  /// Bit-identical comparison: same shape, same coordinate bits, same indices.
  friend bool operator==(const Mesh& a, const Mesh& b) noexcept;

 private:
  VertexArray vertices_;
  std::uint32_t arity_;
  std::vector<std::uint32_t> indices_;
};

/// One out-of-range index found by validate().
struct Issue {
  std::size_t element = 0;
  std::uint32_t slot = 0;
  std::uint32_t index = 0;

  friend bool operator==(const Issue&, const Issue&) = default;
};

/// Lists every element index that does not address a vertex. Empty means the
/// mesh is well-formed.
std::vector<Issue> validate(const Mesh& mesh);

/// Faster yes/no form of validate().
bool is_valid(const Mesh& mesh);

/// A dereferenced mesh: each element stores its vertices by value.
/// Element e, slot k lives at coords()[(e * arity + k) * dim].
class ElementSoup {
 public:
  explicit ElementSoup(std::uint32_t dim = 2, std::uint32_t arity = 3);
  ElementSoup(std::uint32_t dim, std::uint32_t arity, std::vector<float> coords);

  /// Builds a soup from nested tuples; every tuple must have the same arity and
  /// every vertex the same dimension.
  static ElementSoup from_tuples(const std::vector<std::vector<std::vector<float>>>& tuples);

  std::uint32_t dim() const noexcept { return dim_; }
  std::uint32_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return coords_.size() / (std::size_t{dim_} * arity_); }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const float> vertex(std::size_t e, std::uint32_t k) const noexcept {
    return {coords_.data() + (e * arity_ + k) * dim_, dim_};
  }
  std::span<const float> element(std::size_t e) const noexcept {
    return {coords_.data() + e * arity_ * dim_, std::size_t{arity_} * dim_};
  }

  const std::vector<float>& coords() const noexcept { return coords_; }
  std::vector<float>& coords() noexcept { return coords_; }

  friend bool operator==(const ElementSoup& a, const ElementSoup& b) noexcept;

 private:
  std::uint32_t dim_;
  std::uint32_t arity_;
  std::vector<float> coords_;
};

/// soup[e][k] = mesh.vertices[mesh.elements[e][k]]. Throws on an out-of-range
/// index, naming the offending element.
ElementSoup dereference(const Mesh& mesh);

/// Appends soups in order. All inputs must share dimension and arity.
ElementSoup concatenate(std::span<const ElementSoup> soups);

}  // namespace remeshx
