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

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "remeshx/error.hpp"
#include "remeshx/mesh.hpp"

namespace remeshx {

using IndexArray = std::vector<std::uint32_t>;

/// One byte per flag so that parallel writers never share a word the way
/// std::vector<bool> would.
using FlagArray = std::vector<std::uint8_t>;

// ---------------------------------------------------------------------------
// Worker pool

/// Name of the environment variable read on first use of the worker pool.
inline constexpr const char* kThreadsEnvVar = "REMESHX_THREADS";

/// Caps the number of worker threads used by every primitive. 0 means all
/// available cores. Process-wide; not meant to be changed while another thread
/// is running primitives.
void set_worker_count(unsigned count);

/// Current cap on worker threads (always >= 1).
unsigned worker_count();

/// Number of hardware threads available to the process.
unsigned hardware_worker_count();

/// Restores the previous worker count on destruction.
class ScopedWorkerCount {
 public:
  explicit ScopedWorkerCount(unsigned count);
  ~ScopedWorkerCount();
  ScopedWorkerCount(const ScopedWorkerCount&) = delete;
  ScopedWorkerCount& operator=(const ScopedWorkerCount&) = delete;

 private:
  unsigned previous_;
};

// ---------------------------------------------------------------------------
// Primitives

/// [0, 1, ..., n-1].
IndexArray fill_sequence(std::size_t n);

struct SortedByKey {
  VertexArray keys;
  IndexArray values;
};

/// Sorts vertices under the bitwise total order and applies the same
/// permutation to `values`. Stable: equal keys keep their input order, so the
/// result does not depend on the worker count.
SortedByKey key_value_sort(const VertexArray& keys, std::span<const std::uint32_t> values);

/// out[i] = flags[0] + ... + flags[i]. Accumulates in 64 bits and throws
/// kIndexOverflow if a running sum does not fit in 32 bits.
IndexArray inclusive_scan(std::span<const std::uint8_t> flags);
IndexArray inclusive_scan(std::span<const std::uint32_t> flags);

namespace detail {

[[noreturn]] void throw_scatter_out_of_range(std::size_t out_len);
void check_scatter_lengths(std::size_t values, std::size_t positions, std::size_t mask);

}  // namespace detail

/// out[positions[i]] = values[i] for every i with mask[i] set. Slots no masked
/// entry writes keep their value-initialized state.
template <typename T>
std::vector<T> scatter(std::span<const T> values, std::span<const std::uint32_t> positions,
                       std::span<const std::uint8_t> mask, std::size_t out_len) {
  detail::check_scatter_lengths(values.size(), positions.size(), mask.size());
  std::vector<T> out(out_len);
  std::atomic<bool> out_of_range{false};
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, values.size()),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) {
                        if (!mask[i]) continue;
                        if (positions[i] >= out_len) {
                          out_of_range.store(true, std::memory_order_relaxed);
                          continue;
                        }
                        out[positions[i]] = values[i];
                      }
                    });
  if (out_of_range.load()) detail::throw_scatter_out_of_range(out_len);
  return out;
}

/// Vertex-array form of scatter; each vertex moves as a unit.
VertexArray scatter(const VertexArray& values, std::span<const std::uint32_t> positions,
                    std::span<const std::uint8_t> mask, std::size_t out_len);

}  // namespace remeshx
