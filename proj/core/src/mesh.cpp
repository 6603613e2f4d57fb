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

#include "remeshx/mesh.hpp"

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_reduce.h>

#include <algorithm>
#include <cstring>
#include <string>

#include "remeshx/error.hpp"

namespace remeshx {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kLengthMismatch: return "length mismatch";
    case ErrorCode::kIndexOutOfRange: return "index out of range";
    case ErrorCode::kNotAPermutation: return "not a permutation";
    case ErrorCode::kIndexOverflow: return "index overflow";
    case ErrorCode::kArityMismatch: return "arity mismatch";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kInvalidMesh: return "invalid mesh";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kBadMagic: return "bad magic";
    case ErrorCode::kTruncated: return "truncated file";
    case ErrorCode::kVerificationFailed: return "verification failed";
  }
  return "unknown error";
}

int compare_vertices(std::span<const float> a, std::span<const float> b) noexcept {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t x = float_bits(a[i]);
    const std::uint32_t y = float_bits(b[i]);
    if (x != y) return x < y ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

namespace {

bool bitwise_equal(const std::vector<float>& a, const std::vector<float>& b) {
  return a.size() == b.size() &&
         (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0);
}

void check_dim(std::uint32_t dim) {
  if (dim == 0) throw Error(ErrorCode::kInvalidArgument, "vertex dimension must be at least 1");
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexArray

VertexArray::VertexArray(std::uint32_t dim) : dim_(dim) { check_dim(dim); }

VertexArray::VertexArray(std::uint32_t dim, std::vector<float> coords)
    : dim_(dim), coords_(std::move(coords)) {
  check_dim(dim);
  if (coords_.size() % dim_ != 0) {
    throw Error(ErrorCode::kLengthMismatch,
                "coordinate count " + std::to_string(coords_.size()) +
                    " is not a multiple of dimension " + std::to_string(dim_));
  }
}

void VertexArray::push_back(std::span<const float> v) {
  if (v.size() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vertex has " + std::to_string(v.size()) + " components, expected " +
                    std::to_string(dim_));
  }
  coords_.insert(coords_.end(), v.begin(), v.end());
}

bool operator==(const VertexArray& a, const VertexArray& b) noexcept {
  return a.dim_ == b.dim_ && bitwise_equal(a.coords_, b.coords_);
}

// ---------------------------------------------------------------------------
// Mesh

Mesh::Mesh(std::uint32_t dim, std::uint32_t arity) : vertices_(dim), arity_(arity) {
  if (arity == 0) throw Error(ErrorCode::kInvalidArgument, "element arity must be at least 1");
}

Mesh::Mesh(VertexArray vertices, std::uint32_t arity, std::vector<std::uint32_t> indices)
    : vertices_(std::move(vertices)), arity_(arity), indices_(std::move(indices)) {
  if (arity_ == 0) throw Error(ErrorCode::kInvalidArgument, "element arity must be at least 1");
  if (indices_.size() % arity_ != 0) {
    throw Error(ErrorCode::kLengthMismatch,
                "index count " + std::to_string(indices_.size()) +
                    " is not a multiple of arity " + std::to_string(arity_));
  }
  if (vertices_.size() > kMaxVertices) {
    throw Error(ErrorCode::kIndexOverflow,
                "mesh has " + std::to_string(vertices_.size()) +
                    " vertices; 32-bit indices address at most " + std::to_string(kMaxVertices));
  }
}

bool operator==(const Mesh& a, const Mesh& b) noexcept {
  return a.arity_ == b.arity_ && a.vertices_ == b.vertices_ && a.indices_ == b.indices_;
}

// ---------------------------------------------------------------------------
// Validation

bool is_valid(const Mesh& mesh) {
  const auto& idx = mesh.indices();
  const std::size_t nv = mesh.num_vertices();
  return tbb::parallel_reduce(
      tbb::blocked_range<std::size_t>(0, idx.size(), 1 << 14), true,
      [&](const tbb::blocked_range<std::size_t>& r, bool ok) {
        if (!ok) return false;
        for (std::size_t i = r.begin(); i != r.end(); ++i) {
          if (idx[i] >= nv) return false;
        }
        return true;
      },
      [](bool a, bool b) { return a && b; });
}

std::vector<Issue> validate(const Mesh& mesh) {
  std::vector<Issue> issues;
  if (is_valid(mesh)) return issues;
  const auto& idx = mesh.indices();
  const std::size_t nv = mesh.num_vertices();
  const std::uint32_t k = mesh.arity();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= nv) {
      issues.push_back({i / k, static_cast<std::uint32_t>(i % k), idx[i]});
    }
  }
  return issues;
}

// ---------------------------------------------------------------------------
// ElementSoup

ElementSoup::ElementSoup(std::uint32_t dim, std::uint32_t arity) : dim_(dim), arity_(arity) {
  check_dim(dim);
  if (arity == 0) throw Error(ErrorCode::kInvalidArgument, "element arity must be at least 1");
}

ElementSoup::ElementSoup(std::uint32_t dim, std::uint32_t arity, std::vector<float> coords)
    : ElementSoup(dim, arity) {
  coords_ = std::move(coords);
  if (coords_.size() % (std::size_t{dim_} * arity_) != 0) {
    throw Error(ErrorCode::kLengthMismatch,
                "soup coordinate count is not a multiple of dim * arity");
  }
}

ElementSoup ElementSoup::from_tuples(
    const std::vector<std::vector<std::vector<float>>>& tuples) {
  if (tuples.empty()) return ElementSoup();
  const auto arity = static_cast<std::uint32_t>(tuples.front().size());
  if (arity == 0 || tuples.front().front().empty()) {
    throw Error(ErrorCode::kInvalidArgument, "soup elements must be non-empty");
  }
  const auto dim = static_cast<std::uint32_t>(tuples.front().front().size());
  ElementSoup soup(dim, arity);
  soup.coords_.reserve(tuples.size() * arity * dim);
  for (std::size_t e = 0; e < tuples.size(); ++e) {
    if (tuples[e].size() != arity) {
      throw Error(ErrorCode::kArityMismatch,
                  "ragged soup: element " + std::to_string(e) + " has " +
                      std::to_string(tuples[e].size()) + " vertices, expected " +
                      std::to_string(arity));
    }
    for (const auto& v : tuples[e]) {
      if (v.size() != dim) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "ragged soup: element " + std::to_string(e) + " has a vertex of dimension " +
                        std::to_string(v.size()) + ", expected " + std::to_string(dim));
      }
      soup.coords_.insert(soup.coords_.end(), v.begin(), v.end());
    }
  }
  return soup;
}

bool operator==(const ElementSoup& a, const ElementSoup& b) noexcept {
  return a.dim_ == b.dim_ && a.arity_ == b.arity_ && bitwise_equal(a.coords_, b.coords_);
}

ElementSoup dereference(const Mesh& mesh) {
  const auto issues = validate(mesh);
  if (!issues.empty()) {
    const Issue& first = issues.front();
    throw Error(ErrorCode::kIndexOutOfRange,
                "element " + std::to_string(first.element) + " slot " +
                    std::to_string(first.slot) + " references vertex " +
                    std::to_string(first.index) + " but the mesh has " +
                    std::to_string(mesh.num_vertices()) + " vertices");
  }
  const std::uint32_t dim = mesh.dim();
  const auto& idx = mesh.indices();
  const auto& src = mesh.vertices().coords();
  std::vector<float> out(idx.size() * dim);
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, idx.size()),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) {
                        std::copy_n(src.data() + std::size_t{idx[i]} * dim, dim,
                                    out.data() + i * dim);
                      }
                    });
  return ElementSoup(dim, mesh.arity(), std::move(out));
}

ElementSoup concatenate(std::span<const ElementSoup> soups) {
  if (soups.empty()) return ElementSoup();
  ElementSoup out(soups.front().dim(), soups.front().arity());
  for (const auto& s : soups) {
    if (s.dim() != out.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "cannot concatenate soups of different dimension");
    }
    if (s.arity() != out.arity()) {
      throw Error(ErrorCode::kArityMismatch, "cannot concatenate soups of different arity");
    }
    out.coords().insert(out.coords().end(), s.coords().begin(), s.coords().end());
  }
  return out;
}

}  // namespace remeshx
