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

#include "remeshx/parallel.hpp"

#include <tbb/global_control.h>
#include <tbb/info.h>
#include <tbb/parallel_scan.h>
#include <tbb/parallel_sort.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <memory>
#include <mutex>

#include "remeshx/detail/fixed_dim.hpp"

namespace remeshx {

namespace {

std::mutex g_pool_mutex;
std::unique_ptr<tbb::global_control> g_pool_limit;
unsigned g_requested_workers = 0;

void apply_worker_count_locked(unsigned count) {
  g_pool_limit.reset();
  if (count != 0) {
    g_pool_limit = std::make_unique<tbb::global_control>(
        tbb::global_control::max_allowed_parallelism, count);
  }
  g_requested_workers = count;
}

bool apply_env_worker_count() {
  const char* env = std::getenv(kThreadsEnvVar);
  if (env == nullptr) return false;
  unsigned count = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, count);
  if (ec != std::errc() || ptr != end) return false;
  std::lock_guard lock(g_pool_mutex);
  apply_worker_count_locked(count);
  return true;
}

[[maybe_unused]] const bool g_env_applied = apply_env_worker_count();

}  // namespace

void set_worker_count(unsigned count) {
  std::lock_guard lock(g_pool_mutex);
  apply_worker_count_locked(count);
}

unsigned worker_count() {
  std::lock_guard lock(g_pool_mutex);
  if (g_requested_workers != 0) return g_requested_workers;
  return hardware_worker_count();
}

unsigned hardware_worker_count() {
  return static_cast<unsigned>(std::max(1, tbb::info::default_concurrency()));
}

ScopedWorkerCount::ScopedWorkerCount(unsigned count) {
  std::lock_guard lock(g_pool_mutex);
  previous_ = g_requested_workers;
  apply_worker_count_locked(count);
}

ScopedWorkerCount::~ScopedWorkerCount() {
  std::lock_guard lock(g_pool_mutex);
  apply_worker_count_locked(previous_);
}

// ---------------------------------------------------------------------------

IndexArray fill_sequence(std::size_t n) {
  if (n > kMaxVertices + 1) {
    throw Error(ErrorCode::kIndexOverflow, "sequence length exceeds 32-bit index range");
  }
  IndexArray out(n);
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) {
                        out[i] = static_cast<std::uint32_t>(i);
                      }
                    });
  return out;
}

namespace {

template <std::size_t D>
struct KeyRecord {
  detail::VertexBits<D> bits;
  std::uint32_t position;

  friend bool operator<(const KeyRecord& a, const KeyRecord& b) noexcept {
    for (std::size_t c = 0; c < D; ++c) {
      if (a.bits[c] != b.bits[c]) return a.bits[c] < b.bits[c];
    }
    return a.position < b.position;
  }
};

constexpr std::size_t kRadixBits = 11;
constexpr std::size_t kRadixBuckets = std::size_t{1} << kRadixBits;
constexpr std::size_t kRadixChunk = std::size_t{1} << 16;
constexpr std::size_t kRadixMinSize = 4096;

// One stable counting pass on bits [shift, shift + kRadixBits) of component c.
// Returns false, leaving `dst` untouched, when every record has the same digit.
template <std::size_t D>
bool radix_pass(const std::vector<KeyRecord<D>>& src, std::vector<KeyRecord<D>>& dst,
                std::size_t c, unsigned shift) {
  const std::size_t n = src.size();
  const std::size_t chunks = (n + kRadixChunk - 1) / kRadixChunk;
  auto digit = [&](const KeyRecord<D>& r) {
    return (r.bits[c] >> shift) & (kRadixBuckets - 1);
  };
  // offsets[chunk * kRadixBuckets + digit]
  std::vector<std::size_t> offsets(chunks * kRadixBuckets, 0);
  tbb::parallel_for(std::size_t{0}, chunks, [&](std::size_t k) {
    std::size_t* h = offsets.data() + k * kRadixBuckets;
    const std::size_t end = std::min(n, (k + 1) * kRadixChunk);
    for (std::size_t i = k * kRadixChunk; i < end; ++i) ++h[digit(src[i])];
  });
  std::size_t total = 0;
  for (std::size_t d = 0; d < kRadixBuckets; ++d) {
    for (std::size_t k = 0; k < chunks; ++k) {
      std::size_t& slot = offsets[k * kRadixBuckets + d];
      const std::size_t count = slot;
      if (count == n) return false;
      slot = total;
      total += count;
    }
  }
  tbb::parallel_for(std::size_t{0}, chunks, [&](std::size_t k) {
    std::size_t* next = offsets.data() + k * kRadixBuckets;
    const std::size_t end = std::min(n, (k + 1) * kRadixChunk);
    for (std::size_t i = k * kRadixChunk; i < end; ++i) dst[next[digit(src[i])]++] = src[i];
  });
  return true;
}

// Sorts (bits, position) records. Small inputs use a comparison sort with
// position as tie-break; larger ones an LSD radix sort, whose passes are
// stable. Both give the same order.
template <std::size_t D>
IndexArray sorted_order_fixed(const VertexArray& keys) {
  const std::size_t n = keys.size();
  std::vector<KeyRecord<D>> records(n);
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) {
                        records[i] = {detail::vertex_bits<D>(keys[i]),
                                      static_cast<std::uint32_t>(i)};
                      }
                    });
  if (n < kRadixMinSize) {
    std::sort(records.begin(), records.end());
  } else {
    std::vector<KeyRecord<D>> buffer(n);
    for (std::size_t c = D; c-- > 0;) {
      for (unsigned shift = 0; shift < 32; shift += kRadixBits) {
        if (radix_pass(records, buffer, c, shift)) records.swap(buffer);
      }
    }
  }
  IndexArray order(n);
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) {
                        order[i] = records[i].position;
                      }
                    });
  return order;
}

IndexArray sorted_order_generic(const VertexArray& keys) {
  IndexArray order = fill_sequence(keys.size());
  tbb::parallel_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int c = compare_vertices(keys[a], keys[b]);
    return c != 0 ? c < 0 : a < b;
  });
  return order;
}

}  // namespace

SortedByKey key_value_sort(const VertexArray& keys, std::span<const std::uint32_t> values) {
  if (keys.size() != values.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "key_value_sort: " + std::to_string(keys.size()) + " keys but " +
                    std::to_string(values.size()) + " values");
  }
  if (keys.size() > kMaxVertices) {
    throw Error(ErrorCode::kIndexOverflow, "key_value_sort: too many keys for 32-bit indices");
  }

  IndexArray order;
  if (!detail::with_fixed_dim(keys.dim(), [&]<std::size_t D>() {
        order = sorted_order_fixed<D>(keys);
      })) {
    order = sorted_order_generic(keys);
  }

  const std::uint32_t dim = keys.dim();
  SortedByKey out{VertexArray(dim), IndexArray(keys.size())};
  out.keys.resize(keys.size());
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, order.size()),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) {
                        const auto src = keys[order[i]];
                        std::copy(src.begin(), src.end(), out.keys[i].begin());
                        out.values[i] = values[order[i]];
                      }
                    });
  return out;
}

namespace {

template <typename T>
IndexArray inclusive_scan_impl(std::span<const T> flags) {
  IndexArray out(flags.size());
  std::atomic<bool> overflow{false};
  tbb::parallel_scan(
      tbb::blocked_range<std::size_t>(0, flags.size()), std::uint64_t{0},
      [&](const tbb::blocked_range<std::size_t>& r, std::uint64_t sum, bool is_final) {
        for (std::size_t i = r.begin(); i != r.end(); ++i) {
          sum += flags[i];
          if (is_final) {
            if (sum > kMaxVertices) overflow.store(true, std::memory_order_relaxed);
            out[i] = static_cast<std::uint32_t>(sum);
          }
        }
        return sum;
      },
      std::plus<std::uint64_t>());
  if (overflow.load()) {
    throw Error(ErrorCode::kIndexOverflow, "inclusive_scan: running sum exceeds 32 bits");
  }
  return out;
}

}  // namespace

IndexArray inclusive_scan(std::span<const std::uint8_t> flags) {
  return inclusive_scan_impl(flags);
}

IndexArray inclusive_scan(std::span<const std::uint32_t> flags) {
  return inclusive_scan_impl(flags);
}

namespace detail {

void throw_scatter_out_of_range(std::size_t out_len) {
  throw Error(ErrorCode::kIndexOutOfRange,
              "scatter: masked position is not below output length " + std::to_string(out_len));
}

void check_scatter_lengths(std::size_t values, std::size_t positions, std::size_t mask) {
  if (values != positions || values != mask) {
    throw Error(ErrorCode::kLengthMismatch,
                "scatter: " + std::to_string(values) + " values, " + std::to_string(positions) +
                    " positions, " + std::to_string(mask) + " mask entries");
  }
}

}  // namespace detail

VertexArray scatter(const VertexArray& values, std::span<const std::uint32_t> positions,
                    std::span<const std::uint8_t> mask, std::size_t out_len) {
  detail::check_scatter_lengths(values.size(), positions.size(), mask.size());
  VertexArray out(values.dim());
  out.resize(out_len);
  std::atomic<bool> out_of_range{false};
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, values.size()),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) {
                        if (!mask[i]) continue;
                        if (positions[i] >= out_len) {
                          out_of_range.store(true, std::memory_order_relaxed);
                          continue;
                        }
                        const auto src = values[i];
                        std::copy(src.begin(), src.end(), out[positions[i]].begin());
                      }
                    });
  if (out_of_range.load()) detail::throw_scatter_out_of_range(out_len);
  return out;
}

}  // namespace remeshx
